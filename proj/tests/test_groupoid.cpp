#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "adjhopf/cohomology.hpp"
#include "adjhopf/groupoid.hpp"
#include "test_util.hpp"

using namespace adjhopf;
using testutil::error_code;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("conjugate groupoid of the trivial group") {
    auto gpd = conjugate_groupoid(FiniteGroup::cyclic(1));
    CHECK(gpd.object_count() == 1);
    CHECK(gpd.morphism_count() == 1);
    CHECK(gpd.identity_at(0) == 0);
}

TEST_CASE("conjugate groupoid of Z2 consists of endomorphisms") {
    auto z2 = FiniteGroup::cyclic(2);
    auto gpd = conjugate_groupoid(z2);
    CHECK(gpd.object_count() == 2);
    CHECK(gpd.morphism_count() == 4);
    for (uint32_t i = 0; i < 4; ++i) {
        CHECK(gpd.morphism(i).src == gpd.morphism(i).tgt); // abelian: x <| y = x
        CHECK(gpd.morphism(i).src == i / 2);
    }
}

TEST_CASE("conjugate groupoid of S3 composes by (x,y)(x<|y,z) = (x,yz)") {
    auto s3 = FiniteGroup::symmetric(3);
    auto gpd = conjugate_groupoid(s3);
    CHECK(gpd.object_count() == 6);
    CHECK(gpd.morphism_count() == 36);
    for (uint32_t x = 0; x < 6; ++x) {
        for (uint32_t y = 0; y < 6; ++y) {
            const uint32_t f = x * 6 + y;
            CHECK(gpd.morphism(f).src == x);
            CHECK(gpd.morphism(f).tgt == s3.conj(x, y));
            for (uint32_t z = 0; z < 6; ++z) {
                const uint32_t g = s3.conj(x, y) * 6 + z;
                CHECK(gpd.compose(f, g) == x * 6 + s3.mul(y, z));
            }
        }
    }
    CHECK(error_code([&] { gpd.compose(0, 7); }) != ""); // 0: e->e, 7 starts elsewhere
}

TEST_CASE("chain generators count |G|^(m+1) strings") {
    auto gpd = conjugate_groupoid(FiniteGroup::symmetric(3));
    CHECK(chain_generators(gpd, 0).size() == 6);
    CHECK(chain_generators(gpd, 1).size() == 36);
    CHECK(chain_generators(gpd, 2).size() == 216);
    CHECK(chain_generators(gpd, 3).size() == 1296);
}

TEST_CASE("boundary of a 2-string matches the displayed formula") {
    auto z2 = FiniteGroup::cyclic(2);
    auto gpd = conjugate_groupoid(z2);
    SparseMatrix bd = boundary_matrix(gpd, 1, Q);
    CHECK(bd.nrows() == 4);  // C_1 generators (x0, f0)
    CHECK(bd.ncols() == 8);  // C_2 generators (x0, f0, f1)
    // generators are ordered lexicographically: C_2 index of (x, y, z) with
    // f0 = (x,y), f1 = (x<|y, z) is (x*2+y)*2+z; C_1 index of (x, y) is x*2+y.
    // d(x0,f0,f1) = (x1,f1) - (x0, f0 f1) + (x0, f0)
    for (uint32_t x = 0; x < 2; ++x) {
        for (uint32_t y = 0; y < 2; ++y) {
            for (uint32_t z = 0; z < 2; ++z) {
                SparseVec expect = sv_compress({
                    {z2.conj(x, y) * 2 + z, Scalar::one(Q)},
                    {x * 2 + z2.mul(y, z), -Scalar::one(Q)},
                    {x * 2 + y, Scalar::one(Q)},
                });
                CHECK(bd.col((x * 2 + y) * 2 + z) == expect);
            }
        }
    }
}

TEST_CASE("the boundary squares to zero") {
    for (const char* spec : {"c2", "c3", "c4", "s3"}) {
        auto gpd = conjugate_groupoid(FiniteGroup::from_spec(spec));
        SparseMatrix b0 = boundary_matrix(gpd, 0, Q);
        SparseMatrix b1 = boundary_matrix(gpd, 1, Q);
        SparseMatrix b2 = boundary_matrix(gpd, 2, Q);
        CHECK(b0.compose(b1).is_zero());
        CHECK(b1.compose(b2).is_zero());
        if (gpd.object_count() <= 4) {
            SparseMatrix b3 = boundary_matrix(gpd, 3, Q);
            CHECK(b2.compose(b3).is_zero());
        }
    }
    // degree 3 of the largest example, separately (1296 x 7776)
    auto gpd = conjugate_groupoid(FiniteGroup::symmetric(3));
    CHECK(boundary_matrix(gpd, 2, Q).compose(boundary_matrix(gpd, 3, Q)).is_zero());
}

TEST_CASE("unsupported boundary degrees") {
    auto gpd = conjugate_groupoid(FiniteGroup::cyclic(2));
    CHECK(error_code([&] { boundary_matrix(gpd, 4, Q); }) == "UnsupportedDegree");
    CHECK(error_code([&] { groupoid_cocycle_space(gpd, 0, Q); }) == "UnsupportedDegree");
    CHECK(error_code([&] { groupoid_cocycle_space(gpd, 4, Q); }) == "UnsupportedDegree");
}

TEST_CASE("degree-1 cocycles are constant on conjugacy classes") {
    auto s3 = FiniteGroup::symmetric(3);
    auto gpd = conjugate_groupoid(s3);
    SubspaceBasis one = groupoid_cocycle_space(gpd, 1, Q);
    // number of conjugacy classes of S3 by direct orbit counting
    std::vector<uint32_t> cls(6, 6);
    uint32_t classes = 0;
    for (uint32_t x = 0; x < 6; ++x) {
        if (cls[x] != 6) continue;
        ++classes;
        for (uint32_t y = 0; y < 6; ++y) cls[s3.conj(x, y)] = x;
    }
    CHECK(classes == 3);
    CHECK(one.dim() == classes);
}

TEST_CASE("degree-2 cocycle dimensions for the conjugate groupoid of S3") {
    auto gpd = conjugate_groupoid(FiniteGroup::symmetric(3));
    CHECK(groupoid_cocycle_space(gpd, 2, Q).dim() == 3);
    CHECK(groupoid_cocycle_space(gpd, 2, FieldSpec::prime_field(2)).dim() == 5);
    CHECK(groupoid_cocycle_space(gpd, 2, FieldSpec::prime_field(3)).dim() == 4);
}

TEST_CASE("degree-3 cocycles match a dense elimination oracle on Z2") {
    auto z2 = FiniteGroup::cyclic(2);
    auto gpd = conjugate_groupoid(z2);
    // oracle: solve c(x,y,z) + c(x,yz,w) - c(x<|y,z,w) - c(x,y,zw) = 0 densely
    const uint32_t n = 2;
    std::vector<std::vector<long>> rows;
    for (uint32_t x = 0; x < n; ++x)
        for (uint32_t y = 0; y < n; ++y)
            for (uint32_t z = 0; z < n; ++z)
                for (uint32_t w = 0; w < n; ++w) {
                    std::vector<long> row(8, 0);
                    row[(x * n + y) * n + z] += 1;
                    row[(x * n + z2.mul(y, z)) * n + w] += 1;
                    row[(z2.conj(x, y) * n + z) * n + w] -= 1;
                    row[(x * n + y) * n + z2.mul(z, w)] -= 1;
                    rows.push_back(row);
                }
    // rational elimination on small integers
    uint32_t rank = 0;
    for (uint32_t c = 0; c < 8; ++c) {
        uint32_t piv = rows.size();
        for (uint32_t r = rank; r < rows.size(); ++r) {
            if (rows[r][c] != 0) {
                piv = r;
                break;
            }
        }
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (uint32_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r][c] != 0) {
                long a = rows[rank][c], b = rows[r][c];
                for (uint32_t cc = 0; cc < 8; ++cc) {
                    rows[r][cc] = rows[r][cc] * a - rows[rank][cc] * b;
                }
            }
        }
        ++rank;
    }
    CHECK(groupoid_cocycle_space(gpd, 3, Q).dim() == 8 - rank);
}

TEST_CASE("degree-3 cocycles solve the four-variable identity, two routes") {
    auto s3 = FiniteGroup::symmetric(3);
    auto gpd = conjugate_groupoid(s3);
    const uint32_t n = s3.order();
    SubspaceBasis via_boundary = groupoid_cocycle_space(gpd, 3, Q);

    // direct route: assemble c(x,y,z) + c(x,yz,w) - c(x<|y,z,w) - c(x,y,zw) = 0
    SparseMatrix eqs(Q, n * n * n * n, n * n * n);
    const Scalar one = Scalar::one(Q);
    for (uint32_t x = 0; x < n; ++x)
        for (uint32_t y = 0; y < n; ++y)
            for (uint32_t z = 0; z < n; ++z)
                for (uint32_t w = 0; w < n; ++w) {
                    const uint32_t row = ((x * n + y) * n + z) * n + w;
                    eqs.add_entry(row, (x * n + y) * n + z, one);
                    eqs.add_entry(row, (x * n + s3.mul(y, z)) * n + w, one);
                    eqs.add_entry(row, (s3.conj(x, y) * n + z) * n + w, -one);
                    eqs.add_entry(row, (x * n + y) * n + s3.mul(z, w), -one);
                }
    SubspaceBasis direct = kernel_basis(eqs);
    CHECK(via_boundary == direct);
    CHECK(via_boundary.dim() == 33);

    // every basis vector satisfies the group 3-cocycle identity
    for (const auto& v : via_boundary.vectors) {
        std::vector<Scalar> c(size_t(n) * n * n, Scalar::zero(Q));
        for (const auto& [i, s] : v) c[i] = s;
        CHECK(check_group_3cocycle(s3, c));
    }
}

TEST_CASE("groupoid 2-cocycles of the conjugate groupoid match the diagonal system") {
    for (const char* spec : {"c2", "c3", "c4", "s3"}) {
        auto g = FiniteGroup::from_spec(spec);
        auto gpd = conjugate_groupoid(g);
        for (const FieldSpec f : {Q, FieldSpec::prime_field(3), FieldSpec::prime_field(5)}) {
            if (f.characteristic() == 2) continue;
            SubspaceBasis via_groupoid = groupoid_cocycle_space(gpd, 2, f);
            SubspaceBasis via_diagonal = diagonal_2cocycles(g, f);
            CHECK(via_groupoid == via_diagonal); // identical echelon bases
        }
    }
}

TEST_CASE("cocycle-twisted composition on morphism-scalar pairs is associative") {
    auto z3 = FiniteGroup::cyclic(3);
    auto gpd = conjugate_groupoid(z3);
    const FieldSpec f3 = FieldSpec::prime_field(3);
    const uint32_t nm = gpd.morphism_count();
    auto cocycles = groupoid_cocycle_space(gpd, 3, f3);
    REQUIRE(cocycles.dim() > 0);

    // (f0, a) . (f1, b) = (f0 f1, a + b + c(src(f0), f0, f1)), exhaustively
    // over composable triples and all scalar decorations.  C_2 strings
    // (x0, f0, f1) of the conjugate groupoid of Z3 are indexed f0*3 + (f1 % 3).
    auto cidx = [&](uint32_t f0, uint32_t f1) { return f0 * 3 + (f1 % 3); };
    auto associative = [&](const std::vector<Scalar>& c) {
        for (uint32_t f0 = 0; f0 < nm; ++f0)
            for (uint32_t f1 = 0; f1 < nm; ++f1) {
                if (!gpd.composable(f0, f1)) continue;
                for (uint32_t f2 = 0; f2 < nm; ++f2) {
                    if (!gpd.composable(f1, f2)) continue;
                    for (long a = 0; a < 3; ++a)
                        for (long b = 0; b < 3; ++b)
                            for (long e = 0; e < 3; ++e) {
                                // scalar parts of ((f0,a)(f1,b))(f2,e) and
                                // (f0,a)((f1,b)(f2,e))
                                Scalar lhs = Scalar::of(f3, a + b + e) + c[cidx(f0, f1)] +
                                             c[cidx(gpd.compose(f0, f1), f2)];
                                Scalar rhs = Scalar::of(f3, a + b + e) + c[cidx(f1, f2)] +
                                             c[cidx(f0, gpd.compose(f1, f2))];
                                if (lhs != rhs) return false;
                            }
                }
            }
        return true;
    };
    for (const auto& v : cocycles.vectors) {
        std::vector<Scalar> c(size_t(nm) * 3, Scalar::zero(f3));
        for (const auto& [i, s] : v) c[i] = s;
        CHECK(associative(c));
    }
    // and a non-cocycle function twists non-associatively
    std::vector<Scalar> bad(size_t(nm) * 3, Scalar::zero(f3));
    bad[5] = Scalar::one(f3);
    if (!subspace_contains(cocycles, sv_unit(5, Scalar::one(f3)))) {
        CHECK_FALSE(associative(bad));
    }
}

TEST_CASE("morphism functions are 1-cocycles iff additive on composable pairs") {
    auto z4 = FiniteGroup::cyclic(4);
    auto gpd = conjugate_groupoid(z4);
    const uint32_t nm = gpd.morphism_count();
    // over Q all additive maps Z4 -> Q vanish; over F2 each object carries the
    // 1-dimensional space generated by y mod 2, so the space has dimension 4
    const FieldSpec f2 = FieldSpec::prime_field(2);
    SparseMatrix bd = boundary_matrix(gpd, 1, f2);
    auto is_cocycle = [&](const std::vector<Scalar>& a) {
        for (uint32_t col = 0; col < bd.ncols(); ++col) {
            Scalar acc = Scalar::zero(f2);
            for (const auto& [i, c] : bd.col(col)) acc += c * a[i];
            if (!acc.is_zero()) return false;
        }
        return true;
    };
    auto is_additive = [&](const std::vector<Scalar>& a) {
        for (uint32_t f = 0; f < nm; ++f) {
            for (uint32_t g = 0; g < nm; ++g) {
                if (!gpd.composable(f, g)) continue;
                if (a[gpd.compose(f, g)] != a[f] + a[g]) return false;
            }
        }
        return true;
    };
    CHECK(groupoid_cocycle_space(gpd, 2, Q).dim() == 0);
    auto space = groupoid_cocycle_space(gpd, 2, f2);
    CHECK(space.dim() == 4);
    for (const auto& v : space.vectors) {
        std::vector<Scalar> a(nm, Scalar::zero(f2));
        for (const auto& [i, c] : v) a[i] = c;
        CHECK(is_cocycle(a));
        CHECK(is_additive(a));
    }
    // and a non-additive function is not a cocycle
    std::vector<Scalar> bad(nm, Scalar::zero(f2));
    bad[1] = Scalar::one(f2); // a(e, (e, g)) = 1 but a(e, (e, g^2)) = 0
    CHECK_FALSE(is_additive(bad));
    CHECK_FALSE(is_cocycle(bad));
}

TEST_CASE("rack 2-cocycles from the diagonal solutions of S3") {
    auto s3 = FiniteGroup::symmetric(3);
    const uint32_t n = s3.order();
    std::vector<Scalar> zero(size_t(n) * n, Scalar::zero(Q));
    CHECK(check_rack_2cocycle(s3, rack_2cocycle_from(s3, zero)));

    for (const auto& v : diagonal_2cocycles(s3, Q).vectors) {
        std::vector<Scalar> a(size_t(n) * n, Scalar::zero(Q));
        for (const auto& [i, c] : v) a[i] = c;
        auto psi = rack_2cocycle_from(s3, a);
        CHECK(check_rack_2cocycle(s3, psi));
        // independent exhaustive verification of the rack identity
        for (uint32_t x = 0; x < n; ++x)
            for (uint32_t y = 0; y < n; ++y)
                for (uint32_t z = 0; z < n; ++z) {
                    CHECK(psi[x * n + y] + psi[s3.conj(x, y) * n + z] ==
                          psi[x * n + z] + psi[s3.conj(x, z) * n + s3.conj(y, z)]);
                }
    }
}

TEST_CASE("violating the 2-cocycle condition is reported with the triple") {
    auto s3 = FiniteGroup::symmetric(3);
    std::vector<Scalar> a(36, Scalar::zero(Q));
    a[1] = Scalar::one(Q);
    CHECK(error_code([&] { rack_2cocycle_from(s3, a); }) == "NotACocycle");
}

TEST_CASE("rack 3-cocycles from 3-coboundaries") {
    std::mt19937_64 rng(67);
    auto s3 = FiniteGroup::symmetric(3);
    const uint32_t n = s3.order();

    // constant c gives theta = 0
    std::vector<Scalar> constant(size_t(n) * n * n, Scalar::of(Q, 4));
    for (const auto& v : rack_3cocycle_from(s3, constant)) CHECK(v.is_zero());

    for (int t = 0; t < 5; ++t) {
        std::vector<Scalar> a;
        for (uint32_t i = 0; i < n * n; ++i) {
            a.push_back(Scalar::of(Q, static_cast<long>(rng() % 11) - 5));
        }
        auto theta = rack_3cocycle_from(s3, group_3coboundary(s3, a));
        CHECK(check_rack_3cocycle(s3, theta));
    }

    std::vector<Scalar> bad(size_t(n) * n * n, Scalar::zero(Q));
    bad[17] = Scalar::one(Q);
    CHECK(error_code([&] { rack_3cocycle_from(s3, bad); }) == "NotACocycle");
}

TEST_CASE("random functions fail the rack conditions") {
    std::mt19937_64 rng(71);
    auto s3 = FiniteGroup::symmetric(3);
    const FieldSpec f7 = FieldSpec::prime_field(7);
    const uint32_t n = s3.order();
    std::vector<Scalar> psi, theta;
    for (uint32_t i = 0; i < n * n; ++i) {
        psi.push_back(Scalar::of(f7, static_cast<long>(rng() % 7)));
    }
    for (uint32_t i = 0; i < n * n * n; ++i) {
        theta.push_back(Scalar::of(f7, static_cast<long>(rng() % 7)));
    }
    CHECK_FALSE(check_rack_2cocycle(s3, psi));
    CHECK_FALSE(check_rack_3cocycle(s3, theta));
}

TEST_CASE("malformed groupoids are rejected") {
    // a two-object structure whose only cross morphism has no inverse
    std::vector<GroupoidMorphism> mors = {{0, 0, "id0"}, {1, 1, "id1"}, {0, 1, "f"}};
    std::vector<std::vector<uint32_t>> comp(3, std::vector<uint32_t>(3, FiniteGroupoid::kNone));
    comp[0][0] = 0;
    comp[1][1] = 1;
    comp[0][2] = 2; // id0 . f = f
    comp[2][1] = 2; // f . id1 = f
    CHECK(error_code([&] { FiniteGroupoid({"a", "b"}, mors, comp); }) == "NotAGroupoid");
}
