#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace superconf {

using Rational = boost::multiprecision::cpp_rational;

/// Exact element of Q(i): re + im*i with rational components.
struct GRat {
    Rational re;
    Rational im;

    GRat() = default;
    GRat(long n) : re(n) {}
    GRat(Rational r) : re(std::move(r)) {}
    GRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GRat i() { return GRat(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GRat operator-() const { return GRat(-re, -im); }
    GRat operator+(const GRat& o) const { return GRat(re + o.re, im + o.im); }
    GRat operator-(const GRat& o) const { return GRat(re - o.re, im - o.im); }
    GRat operator*(const GRat& o) const {
        return GRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GRat inv() const {
        Rational n = re * re + im * im;
        if (n == 0) throw std::domain_error("division by zero in Q(i)");
        return GRat(re / n, -im / n);
    }
    GRat operator/(const GRat& o) const { return *this * o.inv(); }

    GRat& operator+=(const GRat& o) { re += o.re; im += o.im; return *this; }
    GRat& operator-=(const GRat& o) { re -= o.re; im -= o.im; return *this; }
    GRat& operator*=(const GRat& o) { *this = *this * o; return *this; }

    bool operator==(const GRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GRat& o) const { return !(*this == o); }
};

inline GRat operator*(const Rational& r, const GRat& g) { return GRat(r * g.re, r * g.im); }

std::string to_string(const Rational& r);
std::string to_string(const GRat& g);

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

/// Generalized binomial coefficient: top may be any integer, bottom >= 0.
Rational binomial(long top, long bottom);

} // namespace superconf
