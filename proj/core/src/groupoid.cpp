#include "adjhopf/groupoid.hpp"

#include <map>

namespace adjhopf {

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> objects,
                               std::vector<GroupoidMorphism> morphisms,
                               std::vector<std::vector<uint32_t>> composition)
    : objects_(std::move(objects)), mors_(std::move(morphisms)), comp_(std::move(composition)) {
    const uint32_t no = object_count();
    const uint32_t nm = morphism_count();
    if (no == 0) fail("NotAGroupoid", "no objects");
    if (comp_.size() != nm) fail("NotAGroupoid", "composition table has wrong size");
    for (const auto& m : mors_) {
        if (m.src >= no || m.tgt >= no) fail("NotAGroupoid", "morphism endpoint out of range");
    }
    for (uint32_t f = 0; f < nm; ++f) {
        if (comp_[f].size() != nm) fail("NotAGroupoid", "composition table has wrong size");
        for (uint32_t g = 0; g < nm; ++g) {
            const bool defined = comp_[f][g] != kNone;
            if (defined != (mors_[f].tgt == mors_[g].src)) {
                fail("NotAGroupoid", "composability of " + mors_[f].label + " . " +
                                         mors_[g].label + " disagrees with endpoints");
            }
            if (defined) {
                const uint32_t fg = comp_[f][g];
                if (fg >= nm || mors_[fg].src != mors_[f].src || mors_[fg].tgt != mors_[g].tgt) {
                    fail("NotAGroupoid", "composite " + mors_[f].label + " . " + mors_[g].label +
                                             " has wrong endpoints");
                }
            }
        }
    }
    // associativity where defined
    for (uint32_t f = 0; f < nm; ++f) {
        for (uint32_t g = 0; g < nm; ++g) {
            if (!composable(f, g)) continue;
            for (uint32_t h = 0; h < nm; ++h) {
                if (!composable(g, h)) continue;
                if (comp_[comp_[f][g]][h] != comp_[f][comp_[g][h]]) {
                    fail("NotAGroupoid", "associativity fails at (" + mors_[f].label + ", " +
                                             mors_[g].label + ", " + mors_[h].label + ")");
                }
            }
        }
    }
    identity_.assign(no, kNone);
    for (uint32_t e = 0; e < nm; ++e) {
        if (mors_[e].src != mors_[e].tgt) continue;
        bool neutral = true;
        for (uint32_t g = 0; g < nm && neutral; ++g) {
            if (composable(e, g) && comp_[e][g] != g) neutral = false;
            if (composable(g, e) && comp_[g][e] != g) neutral = false;
        }
        if (neutral) identity_[mors_[e].src] = e;
    }
    for (uint32_t x = 0; x < no; ++x) {
        if (identity_[x] == kNone) {
            fail("NotAGroupoid", "object '" + objects_[x] + "' has no identity morphism");
        }
    }
    inverse_.assign(nm, kNone);
    for (uint32_t f = 0; f < nm; ++f) {
        for (uint32_t g = 0; g < nm; ++g) {
            if (composable(f, g) && comp_[f][g] == identity_[mors_[f].src] &&
                composable(g, f) && comp_[g][f] == identity_[mors_[g].src]) {
                inverse_[f] = g;
                break;
            }
        }
        if (inverse_[f] == kNone) {
            fail("NotAGroupoid", "morphism '" + mors_[f].label + "' has no inverse");
        }
    }
}

bool FiniteGroupoid::composable(uint32_t f, uint32_t g) const {
    return mors_[f].tgt == mors_[g].src;
}

uint32_t FiniteGroupoid::compose(uint32_t f, uint32_t g) const {
    if (f >= morphism_count() || g >= morphism_count()) {
        fail("IndexOutOfRange", "morphism index out of range");
    }
    if (!composable(f, g)) {
        fail("NotComposable", mors_[f].label + " . " + mors_[g].label + " is not defined");
    }
    return comp_[f][g];
}

FiniteGroupoid conjugate_groupoid(const FiniteGroup& g) {
    const uint32_t n = g.order();
    std::vector<GroupoidMorphism> mors(size_t(n) * n);
    for (uint32_t x = 0; x < n; ++x) {
        for (uint32_t y = 0; y < n; ++y) {
            mors[x * n + y] = GroupoidMorphism{
                x, g.conj(x, y), "(" + g.label(x) + "," + g.label(y) + ")"};
        }
    }
    std::vector<std::vector<uint32_t>> comp(mors.size(),
                                            std::vector<uint32_t>(mors.size(), FiniteGroupoid::kNone));
    for (uint32_t x = 0; x < n; ++x) {
        for (uint32_t y = 0; y < n; ++y) {
            const uint32_t xy = g.conj(x, y);
            for (uint32_t z = 0; z < n; ++z) {
                // (x, y) . (x <| y, z) = (x, yz)
                comp[x * n + y][xy * n + z] = x * n + g.mul(y, z);
            }
        }
    }
    return FiniteGroupoid(g.labels(), std::move(mors), std::move(comp));
}

std::vector<std::vector<uint32_t>> chain_generators(const FiniteGroupoid& gpd, uint32_t m) {
    std::vector<std::vector<uint32_t>> out;
    for (uint32_t x = 0; x < gpd.object_count(); ++x) out.push_back({x});
    for (uint32_t step = 0; step < m; ++step) {
        std::vector<std::vector<uint32_t>> next;
        for (const auto& s : out) {
            const uint32_t tail_obj =
                step == 0 ? s[0] : gpd.morphism(s[step]).tgt;
            for (uint32_t f = 0; f < gpd.morphism_count(); ++f) {
                if (gpd.morphism(f).src != tail_obj) continue;
                auto t = s;
                t.push_back(f);
                next.push_back(std::move(t));
            }
        }
        out = std::move(next);
    }
    return out;
}

SparseMatrix boundary_matrix(const FiniteGroupoid& gpd, uint32_t m, const FieldSpec& field) {
    if (m > 3) fail("UnsupportedDegree", "boundary is implemented for degrees 0..3");
    const auto domain = chain_generators(gpd, m + 1);
    const auto target = chain_generators(gpd, m);
    std::map<std::vector<uint32_t>, uint32_t> target_index;
    for (uint32_t i = 0; i < target.size(); ++i) target_index[target[i]] = i;

    const Scalar one = Scalar::one(field);
    SparseMatrix bd(field, static_cast<uint32_t>(target.size()),
                    static_cast<uint32_t>(domain.size()));
    for (uint32_t col = 0; col < domain.size(); ++col) {
        const auto& s = domain[col]; // {x0, f0, ..., f_m}
        const uint32_t nmor = m + 1;
        // leading face: drop x0 and f0, base at tgt(f0)
        {
            std::vector<uint32_t> t;
            t.push_back(gpd.morphism(s[1]).tgt);
            for (uint32_t i = 2; i <= nmor; ++i) t.push_back(s[i]);
            bd.add_entry(target_index.at(t), col, one);
        }
        // inner faces: compose f_i f_(i+1), sign (-1)^(i+1)
        for (uint32_t i = 0; i + 1 < nmor; ++i) {
            std::vector<uint32_t> t;
            t.push_back(s[0]);
            for (uint32_t j = 1; j <= nmor; ++j) {
                if (j == i + 1) {
                    t.push_back(gpd.compose(s[j], s[j + 1]));
                } else if (j != i + 2) {
                    t.push_back(s[j]);
                }
            }
            bd.add_entry(target_index.at(t), col, (i % 2 == 0) ? -one : one);
        }
        // trailing face: drop f_m, sign (-1)^(m+1)
        {
            std::vector<uint32_t> t(s.begin(), s.end() - 1);
            bd.add_entry(target_index.at(t), col, (m % 2 == 0) ? -one : one);
        }
    }
    return bd;
}

SubspaceBasis groupoid_cocycle_space(const FiniteGroupoid& gpd, int n, const FieldSpec& field) {
    if (n < 1 || n > 3) fail("UnsupportedDegree", "cocycle spaces are computed for degrees 1..3");
    return kernel_basis(boundary_matrix(gpd, static_cast<uint32_t>(n) - 1, field).transpose());
}

namespace {

const Scalar& at2(const std::vector<Scalar>& v, uint32_t n, uint32_t x, uint32_t y) {
    return v[x * n + y];
}

const Scalar& at3(const std::vector<Scalar>& v, uint32_t n, uint32_t x, uint32_t y, uint32_t z) {
    return v[(x * n + y) * n + z];
}

void expect_size(const std::vector<Scalar>& v, size_t want, const char* what) {
    if (v.size() != want) {
        fail("IndexOutOfRange", std::string(what) + " must have " + std::to_string(want) + " values");
    }
}

} // namespace

bool check_rack_2cocycle(const FiniteGroup& g, const std::vector<Scalar>& psi) {
    const uint32_t n = g.order();
    expect_size(psi, size_t(n) * n, "rack 2-cochain");
    for (uint32_t x = 0; x < n; ++x) {
        for (uint32_t y = 0; y < n; ++y) {
            for (uint32_t z = 0; z < n; ++z) {
                Scalar lhs = at2(psi, n, x, y) + at2(psi, n, g.conj(x, y), z);
                Scalar rhs = at2(psi, n, x, z) + at2(psi, n, g.conj(x, z), g.conj(y, z));
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

bool check_rack_3cocycle(const FiniteGroup& g, const std::vector<Scalar>& theta) {
    const uint32_t n = g.order();
    expect_size(theta, size_t(n) * n * n, "rack 3-cochain");
    for (uint32_t x = 0; x < n; ++x) {
        for (uint32_t y = 0; y < n; ++y) {
            for (uint32_t z = 0; z < n; ++z) {
                for (uint32_t w = 0; w < n; ++w) {
                    Scalar lhs = at3(theta, n, x, y, z) +
                                 at3(theta, n, g.conj(x, z), g.conj(y, z), w) +
                                 at3(theta, n, x, z, w);
                    Scalar rhs = at3(theta, n, g.conj(x, y), z, w) + at3(theta, n, x, y, w) +
                                 at3(theta, n, g.conj(x, w), g.conj(y, w), g.conj(z, w));
                    if (lhs != rhs) return false;
                }
            }
        }
    }
    return true;
}

std::vector<Scalar> rack_2cocycle_from(const FiniteGroup& g, const std::vector<Scalar>& a) {
    const uint32_t n = g.order();
    expect_size(a, size_t(n) * n, "2-cochain");
    for (uint32_t x = 0; x < n; ++x) {
        for (uint32_t y = 0; y < n; ++y) {
            for (uint32_t z = 0; z < n; ++z) {
                Scalar lhs = at2(a, n, x, y) + at2(a, n, g.conj(x, y), z) -
                             at2(a, n, x, g.mul(y, z));
                if (!lhs.is_zero()) {
                    fail("NotACocycle", "condition fails at (" + g.label(x) + ", " + g.label(y) +
                                            ", " + g.label(z) + ")");
                }
            }
        }
    }
    return a;
}

std::vector<Scalar> rack_3cocycle_from(const FiniteGroup& g, const std::vector<Scalar>& c) {
    const uint32_t n = g.order();
    expect_size(c, size_t(n) * n * n, "3-cochain");
    for (uint32_t x = 0; x < n; ++x) {
        for (uint32_t y = 0; y < n; ++y) {
            for (uint32_t z = 0; z < n; ++z) {
                for (uint32_t w = 0; w < n; ++w) {
                    Scalar lhs = at3(c, n, x, y, z) + at3(c, n, x, g.mul(y, z), w);
                    Scalar rhs = at3(c, n, g.conj(x, y), z, w) + at3(c, n, x, y, g.mul(z, w));
                    if (lhs != rhs) {
                        fail("NotACocycle",
                             "condition fails at (" + g.label(x) + ", " + g.label(y) + ", " +
                                 g.label(z) + ", " + g.label(w) + ")");
                    }
                }
            }
        }
    }
    std::vector<Scalar> theta;
    theta.reserve(c.size());
    for (uint32_t x = 0; x < n; ++x) {
        for (uint32_t y = 0; y < n; ++y) {
            for (uint32_t z = 0; z < n; ++z) {
                theta.push_back(at3(c, n, x, y, z) - at3(c, n, x, z, g.conj(y, z)));
            }
        }
    }
    return theta;
}

} // namespace adjhopf
