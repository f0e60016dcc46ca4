#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adjhopf/errors.hpp"

namespace adjhopf {

// Finite group given by its multiplication table.  The table is verified at
// construction: identity, inverses, and associativity over all triples
// (error NotAGroup with the failing triple).
//
// Products read left to right: mul(x, y) applies x first, then y.  For
// symmetric groups this is the usual composition of one-line permutations,
// (pi * sigma)[i] = sigma[pi[i]].
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<uint32_t>> table);

    static FiniteGroup cyclic(uint32_t n);
    /// Permutations of {1..n} enumerated in lexicographic one-line order.
    static FiniteGroup symmetric(uint32_t n);
    /// Dihedral group of order 2n (symmetries of the n-gon), n >= 1.
    static FiniteGroup dihedral(uint32_t n);
    /// Parses "c<n>", "s<n>" or "d<n>" (error ParseError).
    static FiniteGroup from_spec(const std::string& spec);

    uint32_t order() const { return static_cast<uint32_t>(table_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(uint32_t i) const { return labels_[i]; }
    const std::vector<std::vector<uint32_t>>& table() const { return table_; }

    uint32_t identity() const { return identity_; }
    uint32_t mul(uint32_t x, uint32_t y) const;
    uint32_t inv(uint32_t x) const;
    /// Conjugation x <| y = y^-1 x y (error IndexOutOfRange).
    uint32_t conj(uint32_t x, uint32_t y) const;
    bool is_abelian() const;

private:
    void check_index(uint32_t x) const;

    std::vector<std::string> labels_;
    std::vector<std::vector<uint32_t>> table_;
    std::vector<uint32_t> inverse_;
    uint32_t identity_ = 0;
};

} // namespace adjhopf
