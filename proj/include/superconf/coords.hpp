#pragma once

#include "superconf/series.hpp"

#include <vector>

namespace superconf {

/// Data of a formal superconformal coordinate change at zero: an invertible
/// even scaling a plus even coefficients A[j-1] (paired with the derivation
/// L_j) and odd coefficients M[j-1] (paired with G_{j-1/2}), j = 1, 2, ...
struct CoordinateData {
    TablePtr table;
    SuperScalar a;
    std::vector<SuperScalar> A;
    std::vector<SuperScalar> M;
};

/// Data of a coordinate change at infinity: even B[j-1] (paired with L_{-j})
/// and odd N[j-1] (paired with G_{-j+1/2}), j = 1, 2, ...
struct CoordinateDataInf {
    TablePtr table;
    std::vector<SuperScalar> B;
    std::vector<SuperScalar> N;
};

/// L_j = -(x^{j+1} d/dx + ((j+1)/2) x^j phi d/dphi)
ScalarSeries apply_L(TablePtr t, int j, const ScalarSeries& f);
/// G_{j-1/2} = -x^j (d/dphi - phi d/dx)
ScalarSeries apply_G(TablePtr t, int j, const ScalarSeries& f);

struct DerivTerm {
    SuperScalar coeff; // even for L, odd for G
    bool isG = false;
    int j = 0; // L_j or G_{j-1/2}
};

/// exp(sign * sum_k X_k) applied to f, where X_k = coeff * derivation.
/// Throws std::domain_error when the flow fails to terminate under the
/// window and generator caps.
ScalarSeries exp_deriv(TablePtr t, const std::vector<DerivTerm>& X, int sign,
                       const ScalarSeries& f, int max_iter = 200);
CoordMap exp_deriv_map(TablePtr t, const std::vector<DerivTerm>& X, int sign,
                       const CoordMap& base, int max_iter = 200);

std::vector<DerivTerm> deriv_terms_zero(const CoordinateData& d);
/// Derivations for the infinity side: B[j-1] L_{-j} + N[j-1] G_{-j+1/2},
/// with an optional power of tgen attached (t^j on B, t^{j-1/2} on N, the
/// half-integer powers counted in units of t^{1/2}).
std::vector<DerivTerm> deriv_terms_inf(const CoordinateDataInf& d, int tgen = -1);

/// Ehat(a, A, M) = exp(-sum(A_j L_j + M_{j-1/2} G_{j-1/2})) . (a^2 x, a phi)
CoordMap ehat_expand(const CoordinateData& d, Window w);

/// Compositional inverse of a map whose x component starts at c1 x (c1
/// invertible) and phi component at phi d0. Verified by composing back to
/// the identity on the window; throws std::domain_error on failure.
CoordMap map_invert(const CoordMap& H, Window w);

/// Recovers (a, A_1..A_J, M_1/2..M_{J-1/2}) from an Ehat-image map.
/// Throws std::domain_error when H is not of that form on the window.
CoordinateData ehat_inverse(const CoordMap& H, int J, Window w);

/// Dx~ == phi~ * Dphi~ with D = d/dphi + phi d/dx, checked on the window
/// interior (the top x-exponent is excluded: d/dx shifts it outside).
bool is_superconformal(TablePtr t, const CoordMap& H, Window w);

/// (x, phi) -> (x - X - phi Phi, phi - Phi) for sign=+1; the inverse shift
/// (x + X + phi Phi, phi + Phi) for sign=-1.
CoordMap shift_map(TablePtr t, const SuperScalar& X, const SuperScalar& Phi,
                   int sign, Window w);

/// (x, phi) -> (b^2 x, b phi)
CoordMap scale_map(TablePtr t, const SuperScalar& b, Window w);

/// I(x,phi) = (1/x, i phi/x); with conjugate=true, (1/x, -i phi/x).
CoordMap inversion_map(TablePtr t, Window w, bool conjugate = false);

/// Bridge between the series variable pair and ring generators.
SuperScalar promote(const ScalarSeries& f, TablePtr t, int x_gen, int phi_gen);
ScalarSeries demote(const SuperScalar& s, int x_gen, int phi_gen, Window w);

} // namespace superconf
