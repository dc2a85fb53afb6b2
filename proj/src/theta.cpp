#include "superconf/theta.hpp"

namespace superconf {

ThetaFamily ThetaFamily::at_t1() const {
    if (t_gen < 0) return *this;
    ThetaFamily r = *this;
    r.t_gen = -1;
    std::map<int, SuperScalar> repl{{t_gen, SuperScalar::one(table)}};
    r.exp_theta0 = exp_theta0.substitute(repl);
    for (auto& s : r.theta_L) s = s.substitute(repl);
    for (auto& s : r.theta_G) s = s.substitute(repl);
    return r;
}

CoordMap change_map_zero(const CoordinateData& d, int t_gen, Window w) {
    CoordinateData dt = d;
    if (t_gen >= 0) dt.a = SuperScalar::gen(d.table, t_gen, -1) * d.a;
    return map_invert(ehat_expand(dt, w), w);
}

CoordMap change_map_inf(const CoordinateDataInf& d, int t_gen, Window w) {
    return exp_deriv_map(d.table, deriv_terms_inf(d, t_gen), -1,
                         identity_map(d.table, w));
}

namespace {

ThetaFamily read_family(const CoordMap& composite, const TablePtr& t,
                        const ThetaVars& vars, int kind, int J, Window w) {
    // the composite carries slots at all depths the window can see, so read
    // them all and keep the first J
    int Jfit = std::max(J, w.hi);
    CoordinateData data = ehat_inverse(composite, Jfit, w);
    ThetaFamily fam;
    fam.table = t;
    fam.kind = kind;
    fam.exp_theta0 = data.a;
    data.A.resize(J, SuperScalar::zero(t));
    data.M.resize(J, SuperScalar::zero(t));
    fam.theta_L = {data.A.begin(), data.A.begin() + J};
    fam.theta_G = {data.M.begin(), data.M.begin() + J};
    fam.x_gen = vars.x_gen;
    fam.phi_gen = vars.phi_gen;
    fam.t_gen = vars.t_gen;
    return fam;
}

} // namespace

ThetaFamily theta_zero(const CoordinateData& d, const ThetaVars& vars, int J,
                       Window w) {
    TablePtr t = d.table;
    SuperScalar at = vars.t_gen >= 0
                         ? SuperScalar::gen(t, vars.t_gen, -1) * d.a
                         : d.a;
    CoordinateData dt{t, at, d.A, d.M};
    CoordMap Hinv = ehat_expand(dt, w); // H_t^{-1}
    CoordMap Ht = map_invert(Hinv, w);

    SuperScalar X = promote(Ht.x, t, vars.x_gen, vars.phi_gen);
    SuperScalar P = promote(Ht.phi, t, vars.x_gen, vars.phi_gen);

    CoordMap arg = scale_map(t, at.inv(), w); // (t a^-2 w, t^(1/2) a^-1 rho)
    CoordMap v1 = compose_map(shift_map(t, X, P, -1, w), arg, w);
    CoordMap v2 = compose_map(Hinv, v1, w);
    SuperScalar xg = SuperScalar::gen(t, vars.x_gen);
    SuperScalar pg = SuperScalar::gen(t, vars.phi_gen);
    CoordMap v3 = compose_map(shift_map(t, xg, pg, +1, w), v2, w);

    if (!is_superconformal(t, v3, w))
        throw std::logic_error("theta composite lost superconformality");
    return read_family(v3, t, vars, 1, J, w);
}

ThetaFamily theta_inf(const CoordinateDataInf& d, const ThetaVars& vars, int J,
                      Window w) {
    TablePtr t = d.table;
    auto terms = deriv_terms_inf(d, vars.t_gen);
    CoordMap HtI = exp_deriv_map(t, terms, -1, identity_map(t, w));
    CoordMap Hinv = exp_deriv_map(t, terms, +1, inversion_map(t, w));

    SuperScalar X = promote(HtI.x, t, vars.x_gen, vars.phi_gen);
    SuperScalar P = promote(HtI.phi, t, vars.x_gen, vars.phi_gen);

    CoordMap v1 = shift_map(t, X, P, -1, w);
    CoordMap v2 = compose_map(Hinv, v1, w);
    CoordMap v3 = compose_map(inversion_map(t, w, true), v2, w);
    SuperScalar xg = SuperScalar::gen(t, vars.x_gen);
    SuperScalar pg = SuperScalar::gen(t, vars.phi_gen);
    CoordMap v4 = compose_map(shift_map(t, xg, pg, +1, w), v3, w);

    if (!is_superconformal(t, v4, w))
        throw std::logic_error("theta composite lost superconformality");
    return read_family(v4, t, vars, 2, J, w);
}

} // namespace superconf
