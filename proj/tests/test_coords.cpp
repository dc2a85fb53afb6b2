#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superconf/coords.hpp"

#include <random>

using namespace superconf;

namespace {

struct Fixture {
    TablePtr t;
    int xg, pg;
    Fixture() {
        auto tab = std::make_shared<GeneratorTable>();
        tab->add("a", Parity::even, true);
        tab->add("A1", Parity::even, false, 4);
        tab->add("A2", Parity::even, false, 4);
        tab->add("A3", Parity::even, false, 4);
        tab->add("M1", Parity::odd); // pairs with G_{1/2}
        tab->add("M3", Parity::odd); // pairs with G_{3/2}
        tab->add("M5", Parity::odd); // pairs with G_{5/2}
        tab->add("x", Parity::even, true);
        tab->add("ph", Parity::odd);
        t = tab;
        xg = tab->index("x");
        pg = tab->index("ph");
    }
    SuperScalar one() const { return SuperScalar::one(t); }
    SuperScalar g(const std::string& n, int e = 1) const { return SuperScalar::gen(t, n, e); }
};

CoordinateData symbolic_data(const Fixture& f, int J) {
    CoordinateData d;
    d.table = f.t;
    d.a = f.g("a");
    const char* An[] = {"A1", "A2", "A3"};
    const char* Mn[] = {"M1", "M3", "M5"};
    for (int j = 1; j <= J; ++j) {
        d.A.push_back(f.g(An[j - 1]));
        d.M.push_back(f.g(Mn[j - 1]));
    }
    return d;
}

} // namespace

TEST_CASE("L and G derivations satisfy the bracket relations on test series") {
    Fixture f;
    Window w{-8, 10};
    // check on x^k and phi x^k for a spread of k
    std::vector<ScalarSeries> probes;
    for (int k = -4; k <= 4; ++k) {
        probes.push_back(series_xpow_term(w, f.one(), k));
        probes.push_back(series_phi_term(w, f.one(), k));
    }
    Window cmp{-5, 7};
    for (int m = -2; m <= 2; ++m) {
        for (int n = -2; n <= 2; ++n) {
            for (auto& p : probes) {
                // [L_m, L_n] = (m - n) L_{m+n}
                auto lhs = apply_L(f.t, m, apply_L(f.t, n, p)) -
                           apply_L(f.t, n, apply_L(f.t, m, p));
                auto rhs = smul_series(SuperScalar::constant(f.t, GRat(m - n)),
                                       apply_L(f.t, m + n, p));
                CHECK(equal_on(lhs, rhs, cmp));
                // {G_{m-1/2}, G_{n-1/2}} = 2 L_{m+n-1}
                auto glhs = apply_G(f.t, m, apply_G(f.t, n, p)) +
                            apply_G(f.t, n, apply_G(f.t, m, p));
                auto grhs = smul_series(SuperScalar::constant(f.t, GRat(2)),
                                        apply_L(f.t, m + n - 1, p));
                CHECK(equal_on(glhs, grhs, cmp));
                // [G_{m-1/2}, L_n] = (m - 1/2 - n/2) G_{m+n-1/2}
                auto clhs = apply_G(f.t, m, apply_L(f.t, n, p)) -
                            apply_L(f.t, n, apply_G(f.t, m, p));
                GRat c(Rational(2 * m - 1 - n, 2));
                auto crhs = smul_series(SuperScalar::constant(f.t, c),
                                        apply_G(f.t, m + n, p));
                CHECK(equal_on(clhs, crhs, cmp));
            }
        }
    }
}

TEST_CASE("ehat expansion has the expected leading terms") {
    Fixture f;
    Window w{0, 5};
    auto d = symbolic_data(f, 1);
    CoordMap H = ehat_expand(d, w);
    auto a2 = f.g("a", 2);
    // x~ = a^2 (x + A1 x^2 - M1 phi x + ...); the od slot stores the
    // coefficient to the right of phi, hence +a^2 M1
    CHECK(H.x.ev.at(1) == a2);
    CHECK(H.x.ev.at(2) == a2 * f.g("A1"));
    CHECK(H.x.od.at(1) == a2 * f.g("M1"));
    // phi~ = a (phi + M1 x + A1 x phi + ...)
    CHECK(H.phi.od.at(0) == f.g("a"));
    CHECK(H.phi.ev.at(1) == f.g("a") * f.g("M1"));
    CHECK(H.phi.od.at(1) == f.g("a") * f.g("A1"));
}

TEST_CASE("ehat expansions are superconformal") {
    Fixture f;
    Window w{0, 8};
    for (int J = 1; J <= 3; ++J) {
        auto d = symbolic_data(f, J);
        CoordMap H = ehat_expand(d, w);
        CHECK(is_superconformal(f.t, H, w));
    }
}

TEST_CASE("scaling-only data gives the pure scaling map") {
    Fixture f;
    Window w{0, 6};
    CoordinateData d{f.t, f.g("a"), {}, {}};
    CoordMap H = ehat_expand(d, w);
    CoordMap S = scale_map(f.t, f.g("a"), w);
    CHECK(H.x == S.x);
    CHECK(H.phi == S.phi);
}

TEST_CASE("map inversion composes to the identity both ways") {
    Fixture f;
    Window w{0, 8};
    auto d = symbolic_data(f, 2);
    CoordMap H = ehat_expand(d, w);
    CoordMap K = map_invert(H, w);
    // map_invert verifies internally; spot-check the leading inverse scaling
    CHECK(K.x.ev.at(1) == f.g("a", -2));
    CHECK(K.phi.od.at(0) == f.g("a", -1));
}

TEST_CASE("ehat data roundtrips through expansion symbolically") {
    Fixture f;
    Window w{0, 8};
    auto d = symbolic_data(f, 3);
    CoordMap H = ehat_expand(d, w);
    CoordinateData back = ehat_inverse(H, 3, w);
    CHECK(back.a == d.a);
    for (int j = 0; j < 3; ++j) {
        CHECK(back.A[j] == d.A[j]);
        CHECK(back.M[j] == d.M[j]);
    }
}

TEST_CASE("randomized ehat bijection roundtrip") {
    // Independent of the triangular-solve implementation detail: random data
    // with rational and soul-valued entries must roundtrip exactly.
    auto tab = std::make_shared<GeneratorTable>();
    tab->add("z1", Parity::odd);
    tab->add("z2", Parity::odd);
    tab->add("z3", Parity::odd);
    TablePtr t = tab;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), pick(0, 2);

    auto rq = [&]() { return GRat(Rational(num(rng), den(rng))); };
    auto z = [&](int i) { return SuperScalar::gen(t, t->odd_gen(i)); };

    Window w{0, 9};
    for (int trial = 0; trial < 50; ++trial) {
        CoordinateData d;
        d.table = t;
        GRat av = rq();
        if (av.is_zero()) av = GRat(1);
        d.a = SuperScalar::constant(t, av) + (pick(rng) == 0 ? z(0) * z(1) : SuperScalar::zero(t));
        int J = 1 + trial % 3;
        for (int j = 0; j < J; ++j) {
            d.A.push_back(SuperScalar::constant(t, rq()) +
                          (pick(rng) == 0 ? rq() * (z(0) * z(2)) : SuperScalar::zero(t)));
            d.M.push_back(rq() * z(trial % 3) + rq() * (z(0) * z(1) * z(2)));
        }
        CoordMap H = ehat_expand(d, w);
        CHECK(is_superconformal(t, H, w));
        CoordinateData back = ehat_inverse(H, J, w);
        CHECK(back.a == d.a);
        for (int j = 0; j < J; ++j) {
            CHECK(back.A[j] == d.A[j]);
            CHECK(back.M[j] == d.M[j]);
        }
        // and the compositional inverse exists on the window
        CoordMap K = map_invert(H, w);
        CHECK(is_superconformal(t, K, w));
    }
}

TEST_CASE("shift maps are mutually inverse") {
    Fixture f;
    Window w{-3, 5};
    auto X = f.g("A1");
    auto P = f.g("M1");
    CoordMap s = shift_map(f.t, X, P, +1, w);
    CoordMap si = shift_map(f.t, X, P, -1, w);
    CoordMap id = identity_map(f.t, w);
    auto c1 = compose_map(s, si, w);
    auto c2 = compose_map(si, s, w);
    CHECK(c1.x == id.x);
    CHECK(c1.phi == id.phi);
    CHECK(c2.x == id.x);
    CHECK(c2.phi == id.phi);
}

TEST_CASE("inversion map squares to (x, -phi)") {
    Fixture f;
    Window w{-4, 4};
    CoordMap I = inversion_map(f.t, w);
    auto II = compose_map(I, I, w);
    CHECK(II.x == identity_map(f.t, w).x);
    CHECK(II.phi == (-identity_map(f.t, w).phi));
    // I^{-1} o I = identity with the conjugate sign
    CoordMap Ii = inversion_map(f.t, w, true);
    auto id = compose_map(Ii, I, w);
    CHECK(id.x == identity_map(f.t, w).x);
    CHECK(id.phi == identity_map(f.t, w).phi);
}

TEST_CASE("promote and demote are mutually inverse with signs") {
    Fixture f;
    Window w{-4, 4};
    auto z1 = f.g("M1"); // any odd element
    ScalarSeries s = series_xpow_term(w, f.g("A1"), 2) +
                     series_phi_term(w, z1, -1) +
                     series_phi_term(w, f.g("a", -1), 3);
    SuperScalar p = promote(s, f.t, f.xg, f.pg);
    ScalarSeries back = demote(p, f.xg, f.pg, w);
    CHECK(back == s);

    // demote keeps left-of-phi coefficients: ph * x * M1 stores M1 on od side
    auto e = SuperScalar::gen(f.t, f.pg) * SuperScalar::gen(f.t, f.xg) * z1;
    auto ds = demote(e, f.xg, f.pg, w);
    CHECK(ds.od.at(1) == z1);
    CHECK(promote(ds, f.t, f.xg, f.pg) == e);
}

TEST_CASE("exponential flow inverts with opposite sign") {
    Fixture f;
    Window w{0, 7};
    auto d = symbolic_data(f, 2);
    auto X = deriv_terms_zero(d);
    CoordMap id = identity_map(f.t, w);
    CoordMap fwd = exp_deriv_map(f.t, X, -1, id);
    CoordMap both;
    both.x = exp_deriv(f.t, X, +1, fwd.x);
    both.phi = exp_deriv(f.t, X, +1, fwd.phi);
    CHECK(both.x == id.x);
    CHECK(both.phi == id.phi);
}
