#include "superconf/series.hpp"

namespace superconf {

ScalarSeries series_zero(Window w) {
    ScalarSeries s;
    s.win = w;
    return s;
}

ScalarSeries series_const(Window w, const SuperScalar& c) {
    ScalarSeries s;
    s.win = w;
    s.add_ev(0, c);
    return s;
}

ScalarSeries series_xpow_term(Window w, const SuperScalar& c, int n) {
    ScalarSeries s;
    s.win = w;
    s.add_ev(n, c);
    return s;
}

ScalarSeries series_phi_term(Window w, const SuperScalar& c, int n) {
    ScalarSeries s;
    s.win = w;
    s.add_od(n, c);
    return s;
}

ScalarSeries dx(const ScalarSeries& f) {
    ScalarSeries r;
    r.win = f.win;
    r.truncated = f.truncated;
    for (auto& [n, c] : f.ev)
        if (n != 0) r.add_ev(n - 1, c.scaled(GRat(n)));
    for (auto& [n, c] : f.od)
        if (n != 0) r.add_od(n - 1, c.scaled(GRat(n)));
    // d/dx of the lowest kept term is only trustworthy if the window was wide
    // enough; differentiating x^{lo} lands on lo-1 which add_* would flag.
    return r;
}

ScalarSeries dphi(const ScalarSeries& f) {
    ScalarSeries r;
    r.win = f.win;
    r.truncated = f.truncated;
    for (auto& [n, c] : f.od) r.add_ev(n, c);
    return r;
}

ScalarSeries phi_mul(const ScalarSeries& f) {
    ScalarSeries r;
    r.win = f.win;
    r.truncated = f.truncated;
    for (auto& [n, c] : f.ev) r.add_od(n, c);
    return r;
}

namespace {

// Power of a series with even part only.
ScalarSeries even_pow(const ScalarSeries& X, int n, TablePtr table) {
    ScalarSeries r = series_zero(X.win);
    r.truncated = X.truncated;
    if (X.ev.empty()) {
        if (n > 0) return r;
        throw std::domain_error("power of zero series");
    }
    if (n == 0) return series_const(X.win, SuperScalar::one(table));

    int k0 = X.ev.begin()->first;
    const SuperScalar& c0 = X.ev.begin()->second;

    SuperScalar c0inv = (n < 0 || X.ev.size() > 1) ? c0.inv() : SuperScalar::one(table);

    // X = c0 x^{k0} (1 + U), U supported on exponents >= 1
    ScalarSeries U = series_zero(X.win);
    U.truncated = X.truncated;
    for (auto it = std::next(X.ev.begin()); it != X.ev.end(); ++it)
        U.add_ev(it->first - k0, c0inv * it->second);

    SuperScalar lead = SuperScalar::one(table);
    if (n > 0)
        for (int i = 0; i < n; ++i) lead *= c0;
    else
        for (int i = 0; i < -n; ++i) lead *= c0inv;

    ScalarSeries acc = series_const(X.win, SuperScalar::one(table));
    ScalarSeries Um = acc;
    long base = static_cast<long>(k0) * n;
    for (int m = 1;; ++m) {
        if (base + m > X.win.hi) break;
        Um = series_mul(Um, U);
        if (Um.is_zero()) break;
        Rational b = binomial(n, m);
        if (b == 0 && n >= 0 && m > n) break;
        acc = acc + smul_series(SuperScalar::constant(table, GRat(b)), Um);
    }
    for (auto& [m, c] : acc.ev) r.add_ev(static_cast<int>(base) + m, lead * c);
    return r;
}

} // namespace

ScalarSeries series_pow(const ScalarSeries& f, int n) {
    TablePtr table;
    if (!f.ev.empty()) table = f.ev.begin()->second.table();
    else if (!f.od.empty()) table = f.od.begin()->second.table();
    else throw std::domain_error("power of empty series");

    ScalarSeries X = series_zero(f.win);
    X.truncated = f.truncated;
    for (auto& [k, c] : f.ev) X.add_ev(k, c);

    ScalarSeries B = series_zero(f.win);
    for (auto& [k, c] : f.od) B.add_od(k, c);

    ScalarSeries r = even_pow(X, n, table);
    if (n != 0 && !B.is_zero()) {
        // (X + B)^n = X^n + n X^{n-1} B since B^2 = 0 and X is even
        ScalarSeries corr = series_mul(even_pow(X, n - 1, table), B);
        r = r + smul_series(SuperScalar::constant(table, GRat(n)), corr);
    }
    return r;
}

CoordMap identity_map(TablePtr t, Window w) {
    CoordMap m;
    m.x = series_xpow_term(w, SuperScalar::one(t), 1);
    m.phi = series_phi_term(w, SuperScalar::one(t), 0);
    return m;
}

CoordMap compose_map(const CoordMap& F, const CoordMap& G, Window w) {
    CoordMap r;
    r.x = compose(F.x, G, w);
    r.phi = compose(F.phi, G, w);
    return r;
}

} // namespace superconf
