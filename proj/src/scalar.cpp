#include "superconf/scalar.hpp"

#include <bit>
#include <sstream>

namespace superconf {

SuperScalar SuperScalar::constant(TablePtr t, GRat c) {
    SuperScalar s(std::move(t));
    if (!c.is_zero()) s.terms_[Monomial{}] = std::move(c);
    return s;
}

SuperScalar SuperScalar::gen(TablePtr t, int g, int exp) {
    const auto& info = t->info(g);
    SuperScalar s(std::move(t));
    if (exp == 0) return one(s.table_);
    if (exp < 0 && !info.invertible)
        throw std::domain_error("negative power of non-invertible generator " + info.name);
    Monomial m;
    if (info.parity == Parity::odd) {
        if (exp > 1) return s; // odd generators square to zero
        m.odd = std::uint64_t(1) << s.table_->odd_slot(g);
    } else {
        m.even = {{g, exp}};
    }
    s.add_term(m, GRat(1));
    return s;
}

SuperScalar SuperScalar::gen(TablePtr t, const std::string& name, int exp) {
    int g = t->index(name);
    return gen(std::move(t), g, exp);
}

void SuperScalar::add_term(const Monomial& m, const GRat& c) {
    if (c.is_zero()) return;
    for (auto& [g, e] : m.even) {
        const auto& info = table_->info(g);
        if (e < 0 && !info.invertible)
            throw std::domain_error("negative power of non-invertible generator " + info.name);
        if (info.cap >= 0 && (e > info.cap || -e > info.cap)) {
            truncated_ = true;
            return;
        }
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SuperScalar SuperScalar::operator-() const {
    SuperScalar r(table_);
    r.truncated_ = truncated_;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

SuperScalar SuperScalar::operator+(const SuperScalar& o) const {
    SuperScalar r = *this;
    r.truncated_ = truncated_ || o.truncated_;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SuperScalar SuperScalar::operator-(const SuperScalar& o) const {
    SuperScalar r = *this;
    r.truncated_ = truncated_ || o.truncated_;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

namespace {

// Koszul sign of merging two ascending odd-factor lists: (-1)^inversions.
int koszul_sign(std::uint64_t a, std::uint64_t b) {
    int inv = 0;
    while (b) {
        int slot = std::countr_zero(b);
        std::uint64_t above = a & ~((std::uint64_t(2) << slot) - 1);
        inv += std::popcount(above);
        b &= b - 1;
    }
    return (inv & 1) ? -1 : 1;
}

} // namespace

SuperScalar SuperScalar::operator*(const SuperScalar& o) const {
    SuperScalar r(table_ ? table_ : o.table_);
    r.truncated_ = truncated_ || o.truncated_;
    for (auto& [ma, ca] : terms_) {
        for (auto& [mb, cb] : o.terms_) {
            if (ma.odd & mb.odd) continue;
            Monomial m;
            m.odd = ma.odd | mb.odd;
            auto ia = ma.even.begin(), ib = mb.even.begin();
            while (ia != ma.even.end() || ib != mb.even.end()) {
                if (ib == mb.even.end() || (ia != ma.even.end() && ia->first < ib->first)) {
                    m.even.push_back(*ia++);
                } else if (ia == ma.even.end() || ib->first < ia->first) {
                    m.even.push_back(*ib++);
                } else {
                    int e = ia->second + ib->second;
                    if (e != 0) m.even.push_back({ia->first, e});
                    ++ia; ++ib;
                }
            }
            GRat c = ca * cb;
            if (koszul_sign(ma.odd, mb.odd) < 0) c = -c;
            r.add_term(m, c);
        }
    }
    return r;
}

SuperScalar SuperScalar::scaled(const GRat& c) const {
    SuperScalar r(table_);
    r.truncated_ = truncated_;
    if (c.is_zero()) return r;
    for (auto& [m, t] : terms_) r.terms_[m] = c * t;
    return r;
}

GRat SuperScalar::body() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? GRat(0) : it->second;
}

SuperScalar SuperScalar::soul() const {
    SuperScalar r = *this;
    r.terms_.erase(Monomial{});
    return r;
}

std::optional<Parity> SuperScalar::parity() const {
    std::optional<Parity> p;
    for (auto& [m, c] : terms_) {
        Parity mp = (std::popcount(m.odd) & 1) ? Parity::odd : Parity::even;
        if (!p) p = mp;
        else if (*p != mp) return std::nullopt;
    }
    return p;
}

SuperScalar SuperScalar::sigma() const {
    SuperScalar r(table_);
    r.truncated_ = truncated_;
    for (auto& [m, c] : terms_)
        r.terms_[m] = (std::popcount(m.odd) & 1) ? -c : c;
    return r;
}

SuperScalar SuperScalar::inv(int max_terms) const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // Look for a factorization c0 * m0 * (1 + nilpotent) with m0 invertible.
    for (auto& [m0, c0] : terms_) {
        if (m0.odd) continue;
        bool ok = true;
        for (auto& [g, e] : m0.even)
            if (!table_->info(g).invertible) { ok = false; break; }
        if (!ok) continue;

        Monomial m0inv;
        for (auto& [g, e] : m0.even) m0inv.even.push_back({g, -e});
        SuperScalar lead(table_);
        lead.terms_[m0inv] = c0.inv();

        SuperScalar u = *this * lead - one(table_); // want u nilpotent
        SuperScalar acc = one(table_);
        SuperScalar pw = one(table_);
        bool done = false;
        for (int k = 1; k <= max_terms; ++k) {
            pw = pw * (-u);
            if (pw.is_zero()) { done = true; break; }
            acc += pw;
        }
        if (!done) continue;
        SuperScalar r = lead * acc;
        if (r * *this == one(table_)) return r;
    }
    throw std::domain_error("element is not invertible: " + str());
}

SuperScalar SuperScalar::substitute(const std::map<int, SuperScalar>& repl) const {
    for (auto& [g, v] : repl) {
        Parity gp = table_->info(g).parity;
        auto vp = v.parity();
        if (vp && *vp != gp)
            throw std::invalid_argument("substitution changes parity of " +
                                        table_->info(g).name);
        if (!v.is_zero() && !vp)
            throw std::invalid_argument("mixed-parity substitution for " +
                                        table_->info(g).name);
    }
    SuperScalar r = zero(table_);
    r.truncated_ = truncated_;
    for (auto& [m, c] : terms_) {
        SuperScalar acc = constant(table_, c);
        for (auto& [g, e] : m.even) {
            auto it = repl.find(g);
            if (it == repl.end()) {
                acc *= gen(table_, g, e);
            } else {
                SuperScalar base = e < 0 ? it->second.inv() : it->second;
                for (int k = 0; k < (e < 0 ? -e : e); ++k) acc *= base;
            }
        }
        std::uint64_t odd = m.odd;
        while (odd) {
            int slot = std::countr_zero(odd);
            odd &= odd - 1;
            int g = table_->odd_gen(slot);
            auto it = repl.find(g);
            acc *= (it == repl.end()) ? gen(table_, g) : it->second;
        }
        r += acc;
    }
    return r;
}

std::string SuperScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")";
        for (auto& [g, e] : m.even) {
            os << "*" << table_->info(g).name;
            if (e != 1) os << "^" << e;
        }
        std::uint64_t odd = m.odd;
        while (odd) {
            int slot = std::countr_zero(odd);
            odd &= odd - 1;
            os << "*" << table_->info(table_->odd_gen(slot)).name;
        }
    }
    if (truncated_) os << " [trunc]";
    return os.str();
}

} // namespace superconf
