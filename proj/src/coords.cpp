#include "superconf/coords.hpp"

namespace superconf {

ScalarSeries apply_L(TablePtr t, int j, const ScalarSeries& f) {
    ScalarSeries a = series_mul(series_xpow_term(f.win, SuperScalar::one(t), j + 1), dx(f));
    SuperScalar half(t);
    half = SuperScalar::constant(t, GRat(Rational(j + 1, 2)));
    ScalarSeries b = series_mul(series_xpow_term(f.win, half, j), phi_mul(dphi(f)));
    return -(a + b);
}

ScalarSeries apply_G(TablePtr t, int j, const ScalarSeries& f) {
    ScalarSeries inner = dphi(f) - phi_mul(dx(f));
    return -series_mul(series_xpow_term(f.win, SuperScalar::one(t), j), inner);
}

ScalarSeries exp_deriv(TablePtr t, const std::vector<DerivTerm>& X, int sign,
                       const ScalarSeries& f, int max_iter) {
    ScalarSeries acc = f;
    ScalarSeries term = f;
    for (int k = 1; k <= max_iter; ++k) {
        ScalarSeries d = series_zero(f.win);
        for (auto& dt : X) {
            ScalarSeries df = dt.isG ? apply_G(t, dt.j, term) : apply_L(t, dt.j, term);
            d = d + smul_series(dt.coeff, df);
        }
        SuperScalar fac = SuperScalar::constant(t, GRat(Rational(sign, k)));
        term = smul_series(fac, d);
        if (term.is_zero()) return acc;
        acc = acc + term;
    }
    throw std::domain_error("derivation exponential did not terminate");
}

CoordMap exp_deriv_map(TablePtr t, const std::vector<DerivTerm>& X, int sign,
                       const CoordMap& base, int max_iter) {
    CoordMap r;
    r.x = exp_deriv(t, X, sign, base.x, max_iter);
    r.phi = exp_deriv(t, X, sign, base.phi, max_iter);
    return r;
}

std::vector<DerivTerm> deriv_terms_zero(const CoordinateData& d) {
    std::vector<DerivTerm> v;
    for (size_t j = 1; j <= d.A.size(); ++j)
        if (!d.A[j - 1].is_zero()) v.push_back({d.A[j - 1], false, static_cast<int>(j)});
    for (size_t j = 1; j <= d.M.size(); ++j)
        if (!d.M[j - 1].is_zero()) v.push_back({d.M[j - 1], true, static_cast<int>(j)});
    return v;
}

std::vector<DerivTerm> deriv_terms_inf(const CoordinateDataInf& d, int tgen) {
    std::vector<DerivTerm> v;
    auto tpow = [&](int half_steps) {
        return tgen < 0 ? SuperScalar::one(d.table)
                        : SuperScalar::gen(d.table, tgen, half_steps);
    };
    for (size_t j = 1; j <= d.B.size(); ++j)
        if (!d.B[j - 1].is_zero())
            v.push_back({tpow(2 * static_cast<int>(j)) * d.B[j - 1], false,
                         -static_cast<int>(j)});
    for (size_t j = 1; j <= d.N.size(); ++j)
        if (!d.N[j - 1].is_zero())
            v.push_back({tpow(2 * static_cast<int>(j) - 1) * d.N[j - 1], true,
                         -static_cast<int>(j) + 1});
    return v;
}

CoordMap ehat_expand(const CoordinateData& d, Window w) {
    TablePtr t = d.table;
    CoordMap id = identity_map(t, w);
    CoordMap flow = exp_deriv_map(t, deriv_terms_zero(d), -1, id);
    CoordMap r;
    r.x = smul_series(d.a * d.a, flow.x);
    r.phi = smul_series(d.a, flow.phi);
    return r;
}

CoordMap map_invert(const CoordMap& H, Window w) {
    auto ic1 = H.x.ev.find(1);
    auto id0 = H.phi.od.find(0);
    if (ic1 == H.x.ev.end() || id0 == H.phi.od.end())
        throw std::domain_error("map has no invertible linear part");
    SuperScalar c1 = ic1->second, d0 = id0->second;
    TablePtr t = c1.table();
    SuperScalar c1i = c1.inv(), d0i = d0.inv();

    ScalarSeries h0 = reindexed(H.x, w);
    h0.add_ev(1, -c1);
    ScalarSeries h1 = reindexed(H.phi, w);
    h1.add_od(0, -d0);

    ScalarSeries xs = series_xpow_term(w, SuperScalar::one(t), 1);
    ScalarSeries ps = series_phi_term(w, SuperScalar::one(t), 0);

    CoordMap K;
    K.x = smul_series(c1i, xs);
    K.phi = smul_series(d0i, ps);
    int steps = 2 * (w.hi - w.lo) + 6;
    for (int i = 0; i < steps; ++i) {
        CoordMap next;
        next.x = smul_series(c1i, xs - compose(h0, K, w));
        next.phi = smul_series(d0i, ps - compose(h1, K, w));
        bool fixed = (next.x == K.x) && (next.phi == K.phi);
        K = next;
        if (fixed) break;
    }
    CoordMap chk = compose_map(H, K, w);
    CoordMap chk2 = compose_map(K, H, w);
    CoordMap id = identity_map(t, w);
    if (!(chk.x == id.x && chk.phi == id.phi && chk2.x == id.x && chk2.phi == id.phi))
        throw std::domain_error("map inversion did not converge on the window");
    return K;
}

CoordinateData ehat_inverse(const CoordMap& H, int J, Window w) {
    auto ia = H.phi.od.find(0);
    if (ia == H.phi.od.end())
        throw std::domain_error("map is not a coordinate change at zero");
    CoordinateData d;
    d.a = ia->second;
    d.table = d.a.table();
    SuperScalar ai2 = (d.a * d.a).inv();

    SuperScalar ai = d.a.inv();
    for (int j = 1; j <= J; ++j) {
        CoordMap E = ehat_expand(d, w);
        ScalarSeries delta = smul_series(ai2, reindexed(H.x, w) - E.x);
        auto iA = delta.ev.find(j + 1);
        auto iM = delta.od.find(j);
        // the new x-component terms are A_j x^{j+1} - M_j phi x^j; storing the
        // odd coefficient to the right of phi flips its sign, so the od slot
        // holds +M_j
        SuperScalar Aj =
            iA == delta.ev.end() ? SuperScalar::zero(d.table) : iA->second;
        d.M.push_back(iM == delta.od.end() ? SuperScalar::zero(d.table)
                                           : iM->second);
        if (j + 1 > w.hi) {
            // The x-slot of A_j sits above the window, so read A_j from the
            // phi component, where it enters as ((j+1)/2) a A_j phi x^j.
            // Unlike on x, paired G-flows leave a quadratic residue on phi,
            // so M_j must be in the expansion before the slot is read.
            d.A.push_back(SuperScalar::zero(d.table));
            CoordMap Em = ehat_expand(d, w);
            d.A.pop_back();
            ScalarSeries dphi = reindexed(H.phi, w) - Em.phi;
            auto iP = dphi.od.find(j);
            Aj = iP == dphi.od.end()
                     ? SuperScalar::zero(d.table)
                     : (ai * iP->second).scaled(GRat(Rational(2, j + 1)));
        }
        d.A.push_back(Aj);
    }
    CoordMap E = ehat_expand(d, w);
    if (!(E.x == reindexed(H.x, w) && E.phi == reindexed(H.phi, w)))
        throw std::domain_error("map is not an Ehat image at this order");
    return d;
}

bool is_superconformal(TablePtr t, const CoordMap& H, Window w) {
    auto D = [&](const ScalarSeries& f) { return dphi(f) + phi_mul(dx(f)); };
    ScalarSeries lhs = D(reindexed(H.x, w));
    ScalarSeries rhs = series_mul(reindexed(H.phi, w), D(reindexed(H.phi, w)));
    return equal_on(lhs, rhs, Window{w.lo, w.hi - 1});
}

CoordMap shift_map(TablePtr t, const SuperScalar& X, const SuperScalar& Phi,
                   int sign, Window w) {
    GRat s(sign > 0 ? -1 : 1); // the forward shift subtracts
    CoordMap m = identity_map(t, w);
    m.x.add_ev(0, s * X);
    m.x.add_od(0, s * Phi);
    m.phi.add_ev(0, s * Phi);
    return m;
}

CoordMap scale_map(TablePtr t, const SuperScalar& b, Window w) {
    CoordMap m;
    m.x = series_xpow_term(w, b * b, 1);
    m.phi = series_phi_term(w, b, 0);
    return m;
}

CoordMap inversion_map(TablePtr t, Window w, bool conjugate) {
    CoordMap m;
    m.x = series_xpow_term(w, SuperScalar::one(t), -1);
    GRat i = conjugate ? -GRat::i() : GRat::i();
    m.phi = series_phi_term(w, SuperScalar::constant(t, i), -1);
    return m;
}

SuperScalar promote(const ScalarSeries& f, TablePtr t, int x_gen, int phi_gen) {
    SuperScalar r = SuperScalar::zero(t);
    for (auto& [n, c] : f.ev) r += SuperScalar::gen(t, x_gen, n) * c;
    for (auto& [n, c] : f.od)
        r += SuperScalar::gen(t, phi_gen) * SuperScalar::gen(t, x_gen, n) * c;
    return r;
}

ScalarSeries demote(const SuperScalar& s, int x_gen, int phi_gen, Window w) {
    TablePtr t = s.table();
    int phi_slot = t->odd_slot(phi_gen);
    std::uint64_t phi_bit = std::uint64_t(1) << phi_slot;
    ScalarSeries r = series_zero(w);
    r.truncated = s.truncated();
    for (auto& [m, c] : s.terms()) {
        Monomial rest;
        int xe = 0;
        for (auto& [g, e] : m.even) {
            if (g == x_gen) xe = e;
            else rest.even.push_back({g, e});
        }
        bool has_phi = (m.odd & phi_bit) != 0;
        rest.odd = m.odd & ~phi_bit;
        GRat coeff = c;
        if (has_phi) {
            // sign from moving phi to the front across lower-slot odd factors
            std::uint64_t below = rest.odd & (phi_bit - 1);
            if (std::popcount(below) & 1) coeff = -coeff;
        }
        SuperScalar piece = SuperScalar::zero(t);
        piece.add_term(rest, coeff);
        if (has_phi) r.add_od(xe, piece);
        else r.add_ev(xe, piece);
    }
    return r;
}

} // namespace superconf
