#pragma once

#include "superconf/coords.hpp"

namespace superconf {

/// The local-frame data of a coordinate change, read off by ehat_inverse
/// from the re-centered composite map. exp_theta0 is the scaling slot (kept
/// exponentiated; no logarithm is ever taken), theta_L[j-1] pairs with L(j),
/// theta_G[j-1] with G(j-1/2). Entries are ring elements in the promoted
/// x/phi generators, with t-dependence through the t^{1/2} generator when
/// one is supplied.
struct ThetaFamily {
    TablePtr table;
    int kind = 1; // 1: change at zero, 2: change at infinity
    SuperScalar exp_theta0;
    std::vector<SuperScalar> theta_L;
    std::vector<SuperScalar> theta_G;
    int x_gen = -1;
    int phi_gen = -1;
    int t_gen = -1;

    /// Substitutes t^{1/2} -> 1 (no-op when t was not symbolic).
    ThetaFamily at_t1() const;
};

/// Generator indices the theta pipeline promotes the series variables to,
/// plus the optional t^{1/2} generator (-1 for t = 1).
struct ThetaVars {
    int x_gen;
    int phi_gen;
    int t_gen = -1;
};

/// Theta family of a change at zero: the data of
///   s_(x,phi) o H_t^{-1} o s_{H_t(x,phi)}^{-1} (t a^-2 w, t^(1/2) a^-1 rho)
/// where H_t^{-1} = Ehat(t^{-1/2} a, A, M). J is the cutoff; w the working
/// window in the auxiliary variable.
ThetaFamily theta_zero(const CoordinateData& d, const ThetaVars& vars, int J,
                       Window w);

/// Theta family of a change at infinity: the data of
///   s_(x,phi) o I^{-1} o H_t^{-1} o s_{H_t o I(x,phi)}^{-1} (w,rho)
/// with H_t^{-1} = exp(sum(t^j B_j L_{-j} + t^{j-1/2} N G_{-j+1/2})).(1/x, i phi/x).
ThetaFamily theta_inf(const CoordinateDataInf& d, const ThetaVars& vars, int J,
                      Window w);

/// H_t as a map: the compositional inverse of Ehat(t^{-1/2} a, A, M).
CoordMap change_map_zero(const CoordinateData& d, int t_gen, Window w);
/// H_t o I as a map, per the negative-index exponential.
CoordMap change_map_inf(const CoordinateDataInf& d, int t_gen, Window w);

} // namespace superconf
