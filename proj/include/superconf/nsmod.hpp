#pragma once

#include "superconf/scalar.hpp"

#include <vector>

namespace superconf {

/// A Neveu-Schwarz mode: L(num2/2) when num2 is even, G(num2/2) when odd.
struct NSMode {
    int num2; // twice the index

    bool isG() const { return num2 & 1; }
    bool operator<(const NSMode& o) const { return num2 < o.num2; }
    bool operator==(const NSMode& o) const { return num2 == o.num2; }
};

inline NSMode modeL(int n) { return {2 * n}; }
inline NSMode modeG2(int r2) { return {r2}; } // r2 = 2r, odd

/// Canonical PBW word: modes sorted by ascending num2 (deepest creation
/// first), L-modes may repeat, G-modes are squarefree. Applied left to
/// right to the highest-weight vector.
using NSWord = std::vector<NSMode>;

struct NSWordLess {
    bool operator()(const NSWord& a, const NSWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i].num2 != b[i].num2) return a[i].num2 < b[i].num2;
        return false;
    }
};

/// Element of a Verma module with (possibly symbolic) central charge c and
/// highest weight h.
class VermaModule {
public:
    using Vec = std::map<NSWord, SuperScalar, NSWordLess>;

    VermaModule(TablePtr table, SuperScalar h, SuperScalar c)
        : table_(std::move(table)), h_(std::move(h)), c_(std::move(c)) {}

    const TablePtr& table() const { return table_; }
    const SuperScalar& h() const { return h_; }
    const SuperScalar& c() const { return c_; }

    Vec vac() const { return unit(NSWord{}); }
    Vec unit(NSWord w) const {
        Vec v;
        v.emplace(std::move(w), SuperScalar::one(table_));
        return v;
    }

    /// Level above the highest weight, in half units (weight = h + level2/2).
    static int level2(const NSWord& w) {
        int s = 0;
        for (auto& m : w) s -= m.num2;
        return s;
    }
    static Parity parity(const NSWord& w) {
        int g = 0;
        for (auto& m : w)
            if (m.isG()) ++g;
        return (g & 1) ? Parity::odd : Parity::even;
    }

    /// Normal-ordered action of a single mode. G-modes pick up a Koszul sign
    /// against odd ring coefficients.
    Vec apply(NSMode m, const Vec& v) const;
    Vec applyL(int n, const Vec& v) const { return apply(modeL(n), v); }
    Vec applyG2(int r2, const Vec& v) const { return apply(modeG2(r2), v); }

    /// b^{2*sign*L(0)} on v: multiplies each graded component of weight k by
    /// b^{2*sign*k}; h must be a plain multiple of 1 or the base a monomial,
    /// so the result stays polynomial. base_pow(k2) must supply b^{k2/ ...}:
    /// here b is given as an invertible SuperScalar and the exponent is the
    /// integer 2*sign*k2/2 ... see implementation.
    Vec scale_L0(const SuperScalar& b, int sign2, const Vec& v) const;

    /// (1+eps)^{-2L(0)} with exp_theta0 = body*(1+eps): expands through the
    /// generalized binomial series, polynomial because eps is nilpotent
    /// under the caps. Works with symbolic h (the exponent enters linearly
    /// per binomial factor).
    Vec exp_theta0_pow(const SuperScalar& exp_theta0, int sign, const Vec& v) const;

    /// All PBW words with level2 <= cap2.
    std::vector<NSWord> basis(int cap2) const;

    Vec add(const Vec& a, const Vec& b) const;
    Vec smul(const SuperScalar& s, const Vec& v) const;
    /// Drops components of level2 > cap2.
    Vec truncate(const Vec& v, int cap2) const;
    /// Component of exact weight h + k2/2.
    Vec graded_projection(int k2, const Vec& v) const;

    /// Pairing with the dual basis element of word w (coefficient of w).
    SuperScalar coeff(const Vec& v, const NSWord& w) const;

    /// Functionals on the module, expanded in the basis dual to the PBW
    /// basis; the same container works for both.
    using Dual = Vec;

    /// <v', v> with the Koszul sign for an odd functional crossing an odd
    /// ring coefficient.
    SuperScalar pairing(const Dual& vp, const Vec& v) const;

    /// Adjoint action on functionals: <L'(j) v', v> = <v', L(-j) v>, and the
    /// same for G'. Requires a positive index.
    Dual dual_adjoint_act(NSMode m, const Dual& vp) const;

    std::string str(const Vec& v) const;

private:
    TablePtr table_;
    SuperScalar h_;
    SuperScalar c_;

    void apply_word(NSMode m, NSWord w, const SuperScalar& coeff, Vec& out) const;
    /// Super bracket [a,b] as a list of (coefficient, mode); a null mode
    /// denotes a multiple of the identity (central term, h-term absorbed
    /// elsewhere).
    std::vector<std::pair<SuperScalar, std::optional<NSMode>>> bracket(NSMode a,
                                                                       NSMode b) const;
};

struct ModeTerm {
    SuperScalar coeff;
    NSMode mode;
};

/// exp(sum coeff*mode) v, truncated at level2 cap (cap2 < 0: no cap, valid
/// only when the sum is nilpotent or strictly lowering on v).
VermaModule::Vec exp_modes(const VermaModule& V, const std::vector<ModeTerm>& S,
                           const VermaModule::Vec& v, int cap2,
                           int max_iter = 200);

} // namespace superconf
