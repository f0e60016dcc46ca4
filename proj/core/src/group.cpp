#include "adjhopf/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace adjhopf {

FiniteGroup::FiniteGroup(std::vector<std::string> labels,
                         std::vector<std::vector<uint32_t>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
    const uint32_t n = static_cast<uint32_t>(table_.size());
    if (n == 0) fail("NotAGroup", "empty multiplication table");
    if (labels_.size() != n) fail("NotAGroup", "label count does not match order");
    for (const auto& row : table_) {
        if (row.size() != n) fail("NotAGroup", "table is not square");
        for (uint32_t v : row) {
            if (v >= n) fail("NotAGroup", "table entry out of range");
        }
    }

    // identity: two-sided neutral element
    identity_ = n;
    for (uint32_t e = 0; e < n; ++e) {
        bool ok = true;
        for (uint32_t x = 0; x < n && ok; ++x) {
            ok = table_[e][x] == x && table_[x][e] == x;
        }
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ == n) fail("NotAGroup", "no identity element");

    inverse_.assign(n, n);
    for (uint32_t x = 0; x < n; ++x) {
        for (uint32_t y = 0; y < n; ++y) {
            if (table_[x][y] == identity_ && table_[y][x] == identity_) {
                inverse_[x] = y;
                break;
            }
        }
        if (inverse_[x] == n) {
            fail("NotAGroup", "element '" + labels_[x] + "' has no inverse");
        }
    }

    for (uint32_t x = 0; x < n; ++x) {
        for (uint32_t y = 0; y < n; ++y) {
            for (uint32_t z = 0; z < n; ++z) {
                if (table_[table_[x][y]][z] != table_[x][table_[y][z]]) {
                    fail("NotAGroup", "associativity fails at (" + labels_[x] + ", " +
                                          labels_[y] + ", " + labels_[z] + ")");
                }
            }
        }
    }
}

FiniteGroup FiniteGroup::cyclic(uint32_t n) {
    if (n == 0) fail("ParseError", "cyclic group order must be >= 1");
    std::vector<std::string> labels(n);
    std::vector<std::vector<uint32_t>> table(n, std::vector<uint32_t>(n));
    for (uint32_t i = 0; i < n; ++i) {
        labels[i] = i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i));
        for (uint32_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    return FiniteGroup(std::move(labels), std::move(table));
}

namespace {

std::vector<std::vector<uint32_t>> table_from_permutations(
    const std::vector<std::vector<uint32_t>>& perms) {
    const uint32_t n = static_cast<uint32_t>(perms.size());
    auto find = [&](const std::vector<uint32_t>& p) -> uint32_t {
        auto it = std::find(perms.begin(), perms.end(), p);
        return static_cast<uint32_t>(it - perms.begin());
    };
    std::vector<std::vector<uint32_t>> table(n, std::vector<uint32_t>(n));
    std::vector<uint32_t> prod(perms.front().size());
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = 0; j < n; ++j) {
            // apply perms[i] first, then perms[j]
            for (size_t k = 0; k < prod.size(); ++k) prod[k] = perms[j][perms[i][k]];
            table[i][j] = find(prod);
        }
    }
    return table;
}

} // namespace

FiniteGroup FiniteGroup::symmetric(uint32_t n) {
    if (n == 0) fail("ParseError", "symmetric group degree must be >= 1");
    std::vector<uint32_t> word(n);
    std::iota(word.begin(), word.end(), 0u);
    std::vector<std::vector<uint32_t>> perms;
    std::vector<std::string> labels;
    do {
        perms.push_back(word);
        std::string l;
        for (uint32_t v : word) l += std::to_string(v + 1);
        labels.push_back(l);
    } while (std::next_permutation(word.begin(), word.end()));
    return FiniteGroup(std::move(labels), table_from_permutations(perms));
}

FiniteGroup FiniteGroup::dihedral(uint32_t n) {
    if (n == 0) fail("ParseError", "dihedral parameter must be >= 1");
    // rotations i -> i+1 and the reflection i -> -i on vertices 0..n-1
    std::vector<std::vector<uint32_t>> perms;
    std::vector<std::string> labels;
    for (uint32_t k = 0; k < n; ++k) {
        std::vector<uint32_t> p(n);
        for (uint32_t i = 0; i < n; ++i) p[i] = (i + k) % n;
        perms.push_back(p);
        labels.push_back("r" + std::to_string(k));
    }
    for (uint32_t k = 0; k < n; ++k) {
        std::vector<uint32_t> p(n);
        for (uint32_t i = 0; i < n; ++i) p[i] = (n - i + k) % n;
        perms.push_back(p);
        labels.push_back("sr" + std::to_string(k));
    }
    if (n <= 2) {
        // vertex permutations do not separate elements for n <= 2; use the
        // abstract presentation instead
        const uint32_t m = 2 * n;
        std::vector<std::vector<uint32_t>> table(m, std::vector<uint32_t>(m));
        auto idx = [&](uint32_t flip, uint32_t rot) { return flip * n + rot; };
        for (uint32_t a = 0; a < 2; ++a) {
            for (uint32_t i = 0; i < n; ++i) {
                for (uint32_t b = 0; b < 2; ++b) {
                    for (uint32_t j = 0; j < n; ++j) {
                        // (s^a r^i)(s^b r^j) = s^(a+b) r^(j + (b ? n-i : i))
                        uint32_t rot = (j + (b ? (n - i) % n : i)) % n;
                        table[idx(a, i)][idx(b, j)] = idx((a + b) % 2, rot);
                    }
                }
            }
        }
        std::vector<std::string> ls(m);
        for (uint32_t a = 0; a < 2; ++a) {
            for (uint32_t i = 0; i < n; ++i) {
                ls[idx(a, i)] = (a ? "sr" : "r") + std::to_string(i);
            }
        }
        return FiniteGroup(std::move(ls), std::move(table));
    }
    return FiniteGroup(std::move(labels), table_from_permutations(perms));
}

FiniteGroup FiniteGroup::from_spec(const std::string& spec) {
    if (spec.size() < 2) fail("ParseError", "group spec '" + spec + "' too short");
    uint32_t n = 0;
    const std::string tail = spec.substr(1);
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
    if (ec != std::errc() || ptr != tail.data() + tail.size()) {
        fail("ParseError", "bad group order in '" + spec + "'");
    }
    switch (spec[0]) {
        case 'c': return cyclic(n);
        case 's': return symmetric(n);
        case 'd': return dihedral(n);
        default: fail("ParseError", "unknown group family '" + spec.substr(0, 1) + "'");
    }
}

void FiniteGroup::check_index(uint32_t x) const {
    if (x >= order()) {
        fail("IndexOutOfRange", "group element index " + std::to_string(x) + " out of range");
    }
}

uint32_t FiniteGroup::mul(uint32_t x, uint32_t y) const {
    check_index(x);
    check_index(y);
    return table_[x][y];
}

uint32_t FiniteGroup::inv(uint32_t x) const {
    check_index(x);
    return inverse_[x];
}

uint32_t FiniteGroup::conj(uint32_t x, uint32_t y) const {
    check_index(x);
    check_index(y);
    return table_[table_[inverse_[y]][x]][y];
}

bool FiniteGroup::is_abelian() const {
    for (uint32_t x = 0; x < order(); ++x) {
        for (uint32_t y = 0; y < x; ++y) {
            if (table_[x][y] != table_[y][x]) return false;
        }
    }
    return true;
}

} // namespace adjhopf
