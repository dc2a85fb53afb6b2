#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace superconf {

enum class Parity : unsigned char { even = 0, odd = 1 };

struct GeneratorInfo {
    std::string name;
    Parity parity = Parity::even;
    /// Invertible generators may appear with negative exponents.
    bool invertible = false;
    /// Degree cap: monomials where |exponent| exceeds the cap are dropped
    /// (and the result is marked truncated). -1 means no cap.
    int cap = -1;
};

/// Registry of the free generators of a supercommutative algebra.
/// At most 64 odd generators (they are tracked in a bitmask).
class GeneratorTable {
public:
    int add(const std::string& name, Parity parity, bool invertible = false,
            int cap = -1) {
        if (index_.count(name))
            throw std::invalid_argument("duplicate generator name: " + name);
        if (parity == Parity::odd && odd_count_ >= 64)
            throw std::length_error("too many odd generators");
        if (parity == Parity::odd) ++odd_count_;
        gens_.push_back({name, parity, invertible, cap});
        index_[name] = static_cast<int>(gens_.size()) - 1;
        return static_cast<int>(gens_.size()) - 1;
    }

    int index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw std::domain_error("unknown generator: " + name);
        return it->second;
    }

    bool has(const std::string& name) const { return index_.count(name) != 0; }

    const GeneratorInfo& info(int i) const { return gens_.at(i); }
    int size() const { return static_cast<int>(gens_.size()); }

    /// Position of an odd generator among the odd generators (bit index).
    int odd_slot(int gen) const {
        int slot = 0;
        for (int i = 0; i < gen; ++i)
            if (gens_[i].parity == Parity::odd) ++slot;
        if (gens_.at(gen).parity != Parity::odd)
            throw std::domain_error("generator is not odd: " + gens_[gen].name);
        return slot;
    }

    /// Odd generator index corresponding to a bit slot.
    int odd_gen(int slot) const {
        for (int i = 0, s = 0; i < size(); ++i)
            if (gens_[i].parity == Parity::odd && s++ == slot) return i;
        throw std::domain_error("bad odd slot");
    }

private:
    std::vector<GeneratorInfo> gens_;
    std::map<std::string, int> index_;
    int odd_count_ = 0;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

} // namespace superconf
