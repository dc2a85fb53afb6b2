#pragma once

#include "superconf/scalar.hpp"

#include <map>

namespace superconf {

/// Inclusive range of x-exponents kept in a series.
struct Window {
    int lo = 0;
    int hi = 0;
    bool contains(int n) const { return lo <= n && n <= hi; }
    Window widened(int by) const { return {lo - by, hi + by}; }
};

// Coefficient operations used by the series templates. Overloads for module
// vectors live with the module types.
inline SuperScalar smul(const SuperScalar& s, const SuperScalar& c) { return s * c; }
inline SuperScalar csigma(const SuperScalar& c) { return c.sigma(); }
inline bool cis_zero(const SuperScalar& c) { return c.is_zero(); }

/// Laurent series in one even variable x and one odd variable phi, with
/// coefficients in a supercommutative algebra (or a module over it):
///
///   f = sum_n x^n ev[n]  +  sum_n phi x^n od[n]
///
/// Coefficients sit to the right of phi. Terms pushed outside the window are
/// dropped and the series is marked truncated.
template <class C>
struct GSeries {
    Window win;
    std::map<int, C> ev;
    std::map<int, C> od;
    bool truncated = false;

    void add_ev(int n, const C& c) {
        if (cis_zero(c)) return;
        if (!win.contains(n)) { truncated = true; return; }
        auto it = ev.find(n);
        if (it == ev.end()) ev.emplace(n, c);
        else {
            it->second = it->second + c;
            if (cis_zero(it->second)) ev.erase(it);
        }
    }
    void add_od(int n, const C& c) {
        if (cis_zero(c)) return;
        if (!win.contains(n)) { truncated = true; return; }
        auto it = od.find(n);
        if (it == od.end()) od.emplace(n, c);
        else {
            it->second = it->second + c;
            if (cis_zero(it->second)) od.erase(it);
        }
    }
    bool is_zero() const { return ev.empty() && od.empty(); }
};

using ScalarSeries = GSeries<SuperScalar>;

template <class C>
GSeries<C> operator+(const GSeries<C>& a, const GSeries<C>& b) {
    GSeries<C> r = a;
    r.truncated = a.truncated || b.truncated;
    for (auto& [n, c] : b.ev) r.add_ev(n, c);
    for (auto& [n, c] : b.od) r.add_od(n, c);
    return r;
}

template <class C>
GSeries<C> operator-(const GSeries<C>& a) {
    GSeries<C> r;
    r.win = a.win;
    r.truncated = a.truncated;
    for (auto& [n, c] : a.ev) r.ev.emplace(n, -c);
    for (auto& [n, c] : a.od) r.od.emplace(n, -c);
    return r;
}

template <class C>
GSeries<C> operator-(const GSeries<C>& a, const GSeries<C>& b) { return a + (-b); }

template <class C>
bool operator==(const GSeries<C>& a, const GSeries<C>& b) {
    return a.ev == b.ev && a.od == b.od;
}

/// Left multiplication by a ring element (it crosses phi in the odd part).
template <class C>
GSeries<C> smul_series(const SuperScalar& s, const GSeries<C>& f) {
    GSeries<C> r;
    r.win = f.win;
    r.truncated = f.truncated || s.truncated();
    for (auto& [n, c] : f.ev) r.add_ev(n, smul(s, c));
    SuperScalar ss = s.sigma();
    for (auto& [n, c] : f.od) r.add_od(n, smul(ss, c));
    return r;
}

/// Product of a scalar series with a series over C, in that order.
template <class C>
GSeries<C> series_mul(const ScalarSeries& s, const GSeries<C>& f) {
    GSeries<C> r;
    r.win = f.win;
    r.truncated = s.truncated || f.truncated;
    for (auto& [n, c] : s.ev) {
        for (auto& [k, e] : f.ev) r.add_ev(n + k, smul(c, e));
        SuperScalar cs = c.sigma();
        for (auto& [l, o] : f.od) r.add_od(n + l, smul(cs, o));
    }
    for (auto& [m, d] : s.od) {
        for (auto& [k, e] : f.od) {
            (void)k; (void)e; // phi * phi = 0
        }
        for (auto& [k, e] : f.ev) r.add_od(m + k, smul(d, e));
    }
    return r;
}

template <class C>
GSeries<C> reindexed(const GSeries<C>& f, Window win) {
    GSeries<C> r;
    r.win = win;
    r.truncated = f.truncated;
    for (auto& [n, c] : f.ev) r.add_ev(n, c);
    for (auto& [n, c] : f.od) r.add_od(n, c);
    return r;
}

/// Equality of the coefficients both series carry inside w.
template <class C>
bool equal_on(const GSeries<C>& a, const GSeries<C>& b, Window w) {
    for (int n = w.lo; n <= w.hi; ++n) {
        auto ia = a.ev.find(n), ib = b.ev.find(n);
        bool za = (ia == a.ev.end()), zb = (ib == b.ev.end());
        if (za != zb) return false;
        if (!za && !(ia->second == ib->second)) return false;
        auto oa = a.od.find(n), ob = b.od.find(n);
        bool zoa = (oa == a.od.end()), zob = (ob == b.od.end());
        if (zoa != zob) return false;
        if (!zoa && !(oa->second == ob->second)) return false;
    }
    return true;
}

// --- scalar-series operations -------------------------------------------

ScalarSeries series_zero(Window w);
ScalarSeries series_const(Window w, const SuperScalar& c);
/// c * x^n
ScalarSeries series_xpow_term(Window w, const SuperScalar& c, int n);
/// c * phi x^n
ScalarSeries series_phi_term(Window w, const SuperScalar& c, int n);

ScalarSeries dx(const ScalarSeries& f);
ScalarSeries dphi(const ScalarSeries& f);
/// phi * f
ScalarSeries phi_mul(const ScalarSeries& f);

/// f^n for a series whose even part has an invertible lowest coefficient
/// when n < 0 (or when the binomial tail needs it). The odd part of f must
/// carry odd coefficients and the even part even ones.
ScalarSeries series_pow(const ScalarSeries& f, int n);

/// A superconformal coordinate pair: x component even, phi component odd.
struct CoordMap {
    ScalarSeries x;
    ScalarSeries phi;
};

/// Substitutes H into f: x -> H.x, phi -> H.phi.
template <class C>
GSeries<C> compose(const GSeries<C>& f, const CoordMap& H, Window win) {
    GSeries<C> r;
    r.win = win;
    r.truncated = f.truncated || H.x.truncated || H.phi.truncated;

    // collect the needed powers of H.x in ascending order
    std::map<int, bool> powers;
    for (auto& [n, c] : f.ev) powers[n] = true;
    for (auto& [n, c] : f.od) powers[n] = true;
    if (powers.empty()) return r;

    int nmin = powers.begin()->first;
    ScalarSeries P = series_pow(reindexed(H.x, win), nmin);
    int cur = nmin;
    for (auto& [n, used] : powers) {
        for (; cur < n; ++cur) P = series_mul(P, reindexed(H.x, win));
        auto ie = f.ev.find(n);
        if (ie != f.ev.end()) {
            GSeries<C> cs;
            cs.win = win;
            cs.add_ev(0, ie->second);
            r = r + series_mul(P, cs);
        }
        auto io = f.od.find(n);
        if (io != f.od.end()) {
            GSeries<C> cs;
            cs.win = win;
            cs.add_ev(0, io->second);
            r = r + series_mul(series_mul(reindexed(H.phi, win), P), cs);
        }
    }
    return r;
}

CoordMap identity_map(TablePtr t, Window w);
/// (F o G)(x,phi) = F(G(x,phi))
CoordMap compose_map(const CoordMap& F, const CoordMap& G, Window w);

} // namespace superconf
