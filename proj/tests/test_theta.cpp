#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superconf/theta.hpp"

using namespace superconf;

namespace {

struct Fixture {
    TablePtr t;
    ThetaVars vars;
    Fixture() {
        auto tab = std::make_shared<GeneratorTable>();
        tab->add("a", Parity::even, true);
        tab->add("A1", Parity::even, false, 3);
        tab->add("M1", Parity::odd);
        tab->add("B1", Parity::even, false, 3);
        tab->add("B2", Parity::even, false, 3);
        tab->add("N1", Parity::odd);
        tab->add("N2", Parity::odd);
        tab->add("x", Parity::even, true);
        tab->add("ph", Parity::odd);
        tab->add("th", Parity::even, true); // t^{1/2}
        t = tab;
        vars = {tab->index("x"), tab->index("ph"), tab->index("th")};
    }
    SuperScalar g(const std::string& n, int e = 1) const {
        return SuperScalar::gen(t, n, e);
    }
    SuperScalar one() const { return SuperScalar::one(t); }
    SuperScalar zero() const { return SuperScalar::zero(t); }
};

bool all_thetas_zero(const ThetaFamily& f) {
    for (auto& s : f.theta_L)
        if (!s.is_zero()) return false;
    for (auto& s : f.theta_G)
        if (!s.is_zero()) return false;
    return true;
}

// every monomial of s has exponent of gen g with the given sign (or zero)
bool exponents_bounded(const SuperScalar& s, int g, bool nonneg) {
    for (auto& [m, c] : s.terms()) {
        int e = m.exponent_of(g);
        if (nonneg ? e < 0 : e > 0) return false;
    }
    return true;
}

bool mentions(const SuperScalar& s, const GeneratorTable& tab, int g) {
    for (auto& [m, c] : s.terms()) {
        if (m.exponent_of(g) != 0) return true;
        if (tab.info(g).parity == Parity::odd && (m.odd >> tab.odd_slot(g) & 1))
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("trivial data gives the trivial family at zero") {
    Fixture f;
    CoordinateData d{f.t, f.one(), {f.zero(), f.zero()}, {f.zero(), f.zero()}};
    auto fam = theta_zero(d, f.vars, 2, {-2, 7});
    CHECK(fam.kind == 1);
    CHECK(fam.exp_theta0 == f.one());
    CHECK(all_thetas_zero(fam));
}

TEST_CASE("pure scaling gives the trivial family at zero") {
    // the moving re-centering exactly cancels a constant rescaling, so even
    // a symbolic scale leaves no residue in the local frame
    Fixture f;
    CoordinateData d{f.t, f.g("a"), {f.zero()}, {f.zero()}};
    auto fam = theta_zero(d, f.vars, 1, {-2, 7});
    CHECK(fam.exp_theta0 == f.one());
    CHECK(all_thetas_zero(fam));
}

TEST_CASE("symbolic family at zero: parity, membership, stability") {
    Fixture f;
    CoordinateData d{f.t, f.g("a"), {f.g("A1")}, {f.g("M1")}};
    auto fam = theta_zero(d, f.vars, 1, {-2, 7});

    CHECK(fam.exp_theta0.body() == GRat(1));
    REQUIRE(fam.theta_L.size() == 1);
    REQUIRE(fam.theta_G.size() == 1);
    CHECK(!fam.theta_L[0].is_zero());
    CHECK(!fam.theta_G[0].is_zero());
    CHECK(fam.theta_L[0].parity() == Parity::even);
    CHECK(fam.theta_G[0].parity() == Parity::odd);
    CHECK(fam.exp_theta0.parity() == Parity::even);

    // the zero-side frame data is polynomial in the center x
    CHECK(exponents_bounded(fam.exp_theta0, f.vars.x_gen, true));
    CHECK(exponents_bounded(fam.theta_L[0], f.vars.x_gen, true));
    CHECK(exponents_bounded(fam.theta_G[0], f.vars.x_gen, true));

    // widening the working window does not change the low-order family
    auto fam2 = theta_zero(d, f.vars, 1, {-4, 9});
    CHECK(fam2.exp_theta0 == fam.exp_theta0);
    CHECK(fam2.theta_L[0] == fam.theta_L[0]);
    CHECK(fam2.theta_G[0] == fam.theta_G[0]);

    // t^{1/2} -> 1 is a well-defined specialization
    auto f1 = fam.at_t1();
    CHECK(!mentions(f1.exp_theta0, *f.t, f.vars.t_gen));
    CHECK(!mentions(f1.theta_L[0], *f.t, f.vars.t_gen));
    CHECK(!mentions(f1.theta_G[0], *f.t, f.vars.t_gen));
}

TEST_CASE("trivial data gives the trivial family at infinity") {
    Fixture f;
    CoordinateDataInf d{f.t, {f.zero()}, {f.zero()}};
    auto fam = theta_inf(d, f.vars, 1, {-6, 6});
    CHECK(fam.kind == 2);
    CHECK(fam.exp_theta0 == f.one());
    CHECK(all_thetas_zero(fam));
}

TEST_CASE("supertranslation at infinity gives the trivial family") {
    // B1 and N1 pair with L(-1) and G(-1/2), which generate translations of
    // the far chart; the moving re-centering cancels them exactly
    Fixture f;
    CoordinateDataInf d{f.t, {f.g("B1")}, {f.g("N1")}};
    auto fam = theta_inf(d, f.vars, 1, {-6, 6});
    CHECK(fam.exp_theta0 == f.one());
    CHECK(all_thetas_zero(fam));
}

TEST_CASE("symbolic family at infinity: parity, membership, stability") {
    Fixture f;
    CoordinateDataInf d{f.t, {f.zero(), f.g("B2")}, {f.zero(), f.g("N2")}};
    auto fam = theta_inf(d, f.vars, 2, {-9, 7});

    CHECK(fam.exp_theta0.body() == GRat(1));
    REQUIRE(fam.theta_L.size() == 2);
    REQUIRE(fam.theta_G.size() == 2);
    CHECK((!fam.theta_L[0].is_zero() || !fam.theta_L[1].is_zero()));
    CHECK((!fam.theta_G[0].is_zero() || !fam.theta_G[1].is_zero()));
    for (auto& s : fam.theta_L)
        CHECK((s.is_zero() || s.parity() == Parity::even));
    for (auto& s : fam.theta_G)
        CHECK((s.is_zero() || s.parity() == Parity::odd));

    // the infinity-side frame data is polynomial in 1/x
    CHECK(exponents_bounded(fam.exp_theta0, f.vars.x_gen, false));
    for (auto& s : fam.theta_L)
        CHECK(exponents_bounded(s, f.vars.x_gen, false));
    for (auto& s : fam.theta_G)
        CHECK(exponents_bounded(s, f.vars.x_gen, false));

    auto fam2 = theta_inf(d, f.vars, 2, {-11, 9});
    CHECK(fam2.exp_theta0 == fam.exp_theta0);
    for (size_t j = 0; j < 2; ++j) {
        CHECK(fam2.theta_L[j] == fam.theta_L[j]);
        CHECK(fam2.theta_G[j] == fam.theta_G[j]);
    }
}

TEST_CASE("change maps from the data") {
    Fixture f;

    CoordinateData d{f.t, f.g("a"), {f.zero()}, {f.zero()}};
    auto H = change_map_zero(d, f.vars.t_gen, {0, 6});
    // inverse of (t^{-1} a^2 x, t^{-1/2} a phi)
    auto ta = f.g("th", 2) * f.g("a", -2);
    CHECK(H.x.ev.size() == 1);
    CHECK(H.x.ev.at(1) == ta);
    CHECK(H.phi.od.size() == 1);
    CHECK(H.phi.od.at(0) == f.g("th") * f.g("a", -1));

    CoordinateDataInf di{f.t, {f.zero()}, {f.zero()}};
    auto HI = change_map_inf(di, f.vars.t_gen, {-4, 4});
    auto id = identity_map(f.t, {-4, 4});
    CHECK(equal_on(HI.x, id.x, {-4, 4}));
    CHECK(equal_on(HI.phi, id.phi, {-4, 4}));
}
