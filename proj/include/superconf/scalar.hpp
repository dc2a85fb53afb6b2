#pragma once

#include "superconf/generators.hpp"
#include "superconf/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace superconf {

/// A monomial in the free supercommutative algebra: a sorted exponent list
/// over the even generators plus a bitmask of odd generators (each odd
/// generator squares to zero, so a set suffices). The stored order of odd
/// factors is ascending bit slot.
struct Monomial {
    std::vector<std::pair<int, int>> even; // (generator index, exponent != 0)
    std::uint64_t odd = 0;

    bool operator<(const Monomial& o) const {
        if (odd != o.odd) return odd < o.odd;
        return even < o.even;
    }
    bool operator==(const Monomial& o) const {
        return odd == o.odd && even == o.even;
    }

    int exponent_of(int gen) const {
        for (auto& [g, e] : even)
            if (g == gen) return e;
        return 0;
    }
};

/// Element of the free supercommutative algebra over Q(i) on a generator
/// table. Multiplication applies Koszul signs; monomials whose exponent on a
/// capped generator exceeds the cap are dropped and the element is marked
/// truncated.
class SuperScalar {
public:
    SuperScalar() = default;
    explicit SuperScalar(TablePtr table) : table_(std::move(table)) {}

    static SuperScalar zero(TablePtr t) { return SuperScalar(std::move(t)); }
    static SuperScalar constant(TablePtr t, GRat c);
    static SuperScalar one(TablePtr t) { return constant(std::move(t), GRat(1)); }
    /// gen^exp as an element (exp < 0 requires an invertible generator).
    static SuperScalar gen(TablePtr t, int g, int exp = 1);
    static SuperScalar gen(TablePtr t, const std::string& name, int exp = 1);

    const TablePtr& table() const { return table_; }
    bool is_zero() const { return terms_.empty(); }
    bool truncated() const { return truncated_; }
    void mark_truncated() { truncated_ = true; }

    const std::map<Monomial, GRat>& terms() const { return terms_; }

    /// Adds c * m, dropping the term if a cap is exceeded.
    void add_term(const Monomial& m, const GRat& c);

    SuperScalar operator-() const;
    SuperScalar operator+(const SuperScalar& o) const;
    SuperScalar operator-(const SuperScalar& o) const;
    SuperScalar operator*(const SuperScalar& o) const;
    SuperScalar& operator+=(const SuperScalar& o) { *this = *this + o; return *this; }
    SuperScalar& operator-=(const SuperScalar& o) { *this = *this - o; return *this; }
    SuperScalar& operator*=(const SuperScalar& o) { *this = *this * o; return *this; }

    SuperScalar scaled(const GRat& c) const;

    /// Structural equality of normal forms (truncation marks are ignored).
    bool operator==(const SuperScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const SuperScalar& o) const { return !(*this == o); }

    /// Coefficient of the empty monomial.
    GRat body() const;
    /// Everything except the body.
    SuperScalar soul() const;

    /// Parity of a homogeneous element; nullopt for 0 or mixed parity.
    std::optional<Parity> parity() const;

    /// Negates the odd-parity homogeneous components (the canonical parity
    /// involution; used when a factor is moved across an odd symbol).
    SuperScalar sigma() const;

    /// Multiplicative inverse. Works when the element factors as
    /// c * m0 * (1 + nilpotent) for an invertible monomial m0; throws
    /// std::domain_error otherwise.
    SuperScalar inv(int max_terms = 256) const;

    /// Substitutes generators by ring elements (generators absent from the
    /// map are kept). Values substituted for odd generators must be odd or
    /// zero; for even generators, even.
    SuperScalar substitute(const std::map<int, SuperScalar>& repl) const;

    std::string str() const;

private:
    TablePtr table_;
    std::map<Monomial, GRat> terms_;
    bool truncated_ = false;

    friend SuperScalar mul_monomials(const SuperScalar& a, const SuperScalar& b);
};

inline SuperScalar operator*(const GRat& c, const SuperScalar& s) { return s.scaled(c); }

} // namespace superconf
