#include "superconf/nsmod.hpp"

#include <sstream>
#include <stdexcept>

namespace superconf {

namespace {

SuperScalar spow_int(const SuperScalar& b, long n) {
    SuperScalar base = n < 0 ? b.inv() : b;
    long k = n < 0 ? -n : n;
    SuperScalar r = SuperScalar::one(base.table());
    for (long i = 0; i < k; ++i) r = r * base;
    return r;
}

} // namespace

namespace {

void acc(VermaModule::Vec& out, const NSWord& w, const SuperScalar& s) {
    auto it = out.find(w);
    if (it == out.end())
        out.emplace(w, s);
    else
        it->second += s;
}

} // namespace

std::vector<std::pair<SuperScalar, std::optional<NSMode>>>
VermaModule::bracket(NSMode a, NSMode b) const {
    std::vector<std::pair<SuperScalar, std::optional<NSMode>>> out;
    auto cnst = [&](const Rational& q) {
        return SuperScalar::constant(table_, GRat(q));
    };
    if (!a.isG() && !b.isG()) {
        int m = a.num2 / 2, n = b.num2 / 2;
        if (m != n)
            out.push_back({cnst(m - n), modeL(m + n)});
        if (m + n == 0 && m != 0) {
            Rational cm(static_cast<long>(m) * m * m - m, 12);
            out.push_back({cnst(cm) * c_, std::nullopt});
        }
    } else if (!a.isG() && b.isG()) {
        // [L(m), G(r)] = (m/2 - r) G(m+r)
        Rational coeff(a.num2 - 2 * b.num2, 4);
        if (coeff != 0)
            out.push_back({cnst(coeff), NSMode{a.num2 + b.num2}});
    } else if (a.isG() && !b.isG()) {
        // [G(r), L(n)] = (r - n/2) G(r+n)
        Rational coeff(2 * a.num2 - b.num2, 4);
        if (coeff != 0)
            out.push_back({cnst(coeff), NSMode{a.num2 + b.num2}});
    } else {
        // {G(r), G(s)} = 2 L(r+s) + (c/3)(r^2 - 1/4) delta_{r+s,0}
        out.push_back({cnst(2), modeL((a.num2 + b.num2) / 2)});
        if (a.num2 + b.num2 == 0) {
            Rational cm(static_cast<long>(a.num2) * a.num2 - 1, 12);
            out.push_back({cnst(cm) * c_, std::nullopt});
        }
    }
    return out;
}

void VermaModule::apply_word(NSMode m, NSWord w, const SuperScalar& s,
                             Vec& out) const {
    if (s.is_zero()) return;
    if (w.empty()) {
        if (m.num2 > 0) return;
        if (m.num2 == 0) {
            // L(0) on the highest weight vector
            acc(out, NSWord{}, s * h_);
            return;
        }
        acc(out, NSWord{m}, s);
        return;
    }
    NSMode head = w[0];
    if (m.num2 < head.num2) {
        NSWord nw;
        nw.reserve(w.size() + 1);
        nw.push_back(m);
        nw.insert(nw.end(), w.begin(), w.end());
        acc(out, nw, s);
        return;
    }
    NSWord rest(w.begin() + 1, w.end());
    if (m.num2 == head.num2) {
        if (!m.isG()) {
            NSWord nw;
            nw.reserve(w.size() + 1);
            nw.push_back(m);
            nw.insert(nw.end(), w.begin(), w.end());
            acc(out, nw, s);
        } else {
            // G(r)^2 = L(2r)
            apply_word(NSMode{2 * m.num2}, rest, s, out);
        }
        return;
    }
    // Reorder: m head = eps head m + [m, head]. All coefficients created
    // below are even (rationals, h, c), so the leftmost coefficient s never
    // has to cross an odd operator here.
    bool bothG = m.isG() && head.isG();
    SuperScalar se = bothG ? s.scaled(GRat(-1)) : s;
    Vec tmp;
    apply_word(m, rest, se, tmp);
    for (auto& [u, su] : tmp) apply_word(head, u, su, out);
    for (auto& [bc, bm] : bracket(m, head)) {
        if (bm)
            apply_word(*bm, rest, s * bc, out);
        else
            acc(out, rest, s * bc);
    }
}

VermaModule::Vec VermaModule::apply(NSMode m, const Vec& v) const {
    Vec out;
    for (auto& [w, s] : v) {
        // an odd mode moves across the (possibly odd) ring coefficient
        apply_word(m, w, m.isG() ? s.sigma() : s, out);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

VermaModule::Vec VermaModule::scale_L0(const SuperScalar& b, int sign2,
                                       const Vec& v) const {
    auto hb = h_.body();
    if (!(h_ - SuperScalar::constant(table_, hb)).is_zero())
        throw std::domain_error("scale_L0 needs a numeric highest weight");
    Rational h2q = 2 * hb.re;
    if (hb.im != 0 || denominator(h2q) != 1)
        throw std::domain_error("scale_L0 needs 2h integral");
    long h2 = static_cast<long>(numerator(h2q));
    Vec out;
    for (auto& [w, s] : v) {
        long e = sign2 * (h2 + level2(w));
        acc(out, w, spow_int(b, e) * s);
    }
    return out;
}

VermaModule::Vec VermaModule::exp_theta0_pow(const SuperScalar& E, int sign,
                                             const Vec& v) const {
    GRat b = E.body();
    if (b == GRat(0)) throw std::domain_error("exp_theta0 must be invertible");
    SuperScalar u = E.scaled(b.inv()) - SuperScalar::one(table_);
    bool b_is_one = (b == GRat(1));
    Vec out;
    for (auto& [w, s] : v) {
        // exponent N = -sign * (2h + level); may be symbolic in h
        SuperScalar N =
            (h_.scaled(GRat(-2 * sign)) +
             SuperScalar::constant(table_, GRat(Rational(-sign * level2(w)))));
        SuperScalar factor = SuperScalar::one(table_);
        SuperScalar term = SuperScalar::one(table_);
        for (long m = 1; !term.is_zero(); ++m) {
            if (m > 512)
                throw std::domain_error("exp_theta0_pow does not terminate");
            term = term * (N - SuperScalar::constant(table_, GRat(Rational(m - 1))));
            term = term.scaled(GRat(Rational(1, m))) * u;
            factor = factor + term;
        }
        if (!b_is_one) {
            auto hb = h_.body();
            Rational n2q = -sign * (2 * hb.re + level2(w));
            if (!(h_ - SuperScalar::constant(table_, hb)).is_zero() ||
                hb.im != 0 || denominator(n2q) != 1)
                throw std::domain_error(
                    "symbolic weight needs exp_theta0 with unit body");
            GRat bp = GRat(1);
            long n = static_cast<long>(numerator(n2q));
            GRat base = n < 0 ? b.inv() : b;
            for (long i = 0; i < (n < 0 ? -n : n); ++i) bp = bp * base;
            factor = factor.scaled(bp);
        }
        acc(out, w, factor * s);
    }
    return out;
}

std::vector<NSWord> VermaModule::basis(int cap2) const {
    std::vector<NSWord> out;
    NSWord cur;
    // modes with ascending num2, i.e. chosen from most negative upwards
    auto rec = [&](auto&& self, int num2, int rem) -> void {
        if (num2 > -1) {
            out.push_back(cur);
            return;
        }
        self(self, num2 + 1, rem);
        int maxcnt = (-num2 > 0) ? rem / (-num2) : 0;
        if (num2 & 1) maxcnt = std::min(maxcnt, 1);
        for (int c = 1; c <= maxcnt; ++c) {
            for (int i = 0; i < c; ++i) cur.push_back(NSMode{num2});
            self(self, num2 + 1, rem + c * num2);
            for (int i = 0; i < c; ++i) cur.pop_back();
        }
    };
    rec(rec, -cap2, cap2);
    std::sort(out.begin(), out.end(), NSWordLess{});
    return out;
}

VermaModule::Vec VermaModule::add(const Vec& a, const Vec& b) const {
    Vec out = a;
    for (auto& [w, s] : b) acc(out, w, s);
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

VermaModule::Vec VermaModule::smul(const SuperScalar& s, const Vec& v) const {
    Vec out;
    for (auto& [w, x] : v) {
        SuperScalar y = s * x;
        if (!y.is_zero()) out[w] = y;
    }
    return out;
}

VermaModule::Vec VermaModule::truncate(const Vec& v, int cap2) const {
    Vec out;
    for (auto& [w, s] : v)
        if (level2(w) <= cap2) out[w] = s;
    return out;
}

VermaModule::Vec VermaModule::graded_projection(int k2, const Vec& v) const {
    Vec out;
    for (auto& [w, s] : v)
        if (level2(w) == k2) out[w] = s;
    return out;
}

SuperScalar VermaModule::coeff(const Vec& v, const NSWord& w) const {
    auto it = v.find(w);
    return it == v.end() ? SuperScalar::zero(table_) : it->second;
}

SuperScalar VermaModule::pairing(const Dual& vp, const Vec& v) const {
    SuperScalar out = SuperScalar::zero(table_);
    for (auto& [w, sp] : vp) {
        auto it = v.find(w);
        if (it == v.end()) continue;
        SuperScalar s = it->second;
        if (parity(w) == Parity::odd) s = s.sigma();
        out = out + sp * s;
    }
    return out;
}

VermaModule::Dual VermaModule::dual_adjoint_act(NSMode m, const Dual& vp) const {
    if (m.num2 <= 0)
        throw std::invalid_argument("dual_adjoint_act needs a positive index");
    int maxlev = -1;
    for (auto& [w, s] : vp) maxlev = std::max(maxlev, level2(w));
    Dual out;
    if (maxlev < m.num2) return out;
    for (auto& w : basis(maxlev - m.num2)) {
        Vec e;
        e.emplace(w, SuperScalar::one(table_));
        SuperScalar p = pairing(vp, apply(NSMode{-m.num2}, e));
        if (!p.is_zero()) out[w] = p;
    }
    return out;
}

std::string VermaModule::str(const Vec& v) const {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, s] : v) {
        if (!first) os << " + ";
        first = false;
        os << "(" << s.str() << ")";
        for (auto& m : w) {
            if (m.num2 % 2 == 0)
                os << " L(" << m.num2 / 2 << ")";
            else
                os << " G(" << m.num2 << "/2)";
        }
        os << " vh";
    }
    return os.str();
}

VermaModule::Vec exp_modes(const VermaModule& V, const std::vector<ModeTerm>& S,
                           const VermaModule::Vec& v, int cap2, int max_iter) {
    auto cur = cap2 >= 0 ? V.truncate(v, cap2) : v;
    auto term = cur;
    for (int k = 1; k <= max_iter; ++k) {
        VermaModule::Vec next;
        for (auto& mt : S)
            next = V.add(next, V.smul(mt.coeff.scaled(GRat(Rational(1, k))),
                                      V.apply(mt.mode, term)));
        if (cap2 >= 0) next = V.truncate(next, cap2);
        term = std::move(next);
        if (term.empty()) return cur;
        cur = V.add(cur, term);
    }
    throw std::domain_error("exp_modes does not terminate at this cap");
}

} // namespace superconf
