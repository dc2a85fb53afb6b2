#include "superconf/rational.hpp"

#include <sstream>

namespace superconf {

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::string to_string(const GRat& g) {
    if (g.im == 0) return to_string(g.re);
    std::string im = to_string(g.im) + "i";
    if (g.re == 0) return im;
    if (g.im > 0) return to_string(g.re) + "+" + im;
    return to_string(g.re) + im;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    try {
        using boost::multiprecision::cpp_int;
        if (slash == std::string::npos) return Rational(cpp_int(s));
        cpp_int num(s.substr(0, slash));
        cpp_int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("malformed rational '" + s + "': " + e.what());
    }
}

Rational binomial(long top, long bottom) {
    if (bottom < 0) return Rational(0);
    Rational acc(1);
    for (long k = 0; k < bottom; ++k) {
        acc *= Rational(top - k);
        acc /= Rational(k + 1);
    }
    return acc;
}

} // namespace superconf
