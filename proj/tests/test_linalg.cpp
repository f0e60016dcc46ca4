#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adjhopf/linmap.hpp"
#include "test_util.hpp"

using namespace adjhopf;
using testutil::error_code;
using testutil::random_scalar;

namespace {

const FieldSpec Q = FieldSpec::rationals();

LinearMap random_map(std::mt19937_64& rng, const FieldSpec& f, uint32_t d, uint32_t in_ar,
                     uint32_t out_ar, int entries) {
    LinearMap m(f, d, in_ar, out_ar);
    for (int i = 0; i < entries; ++i) {
        m.add_entry(static_cast<uint32_t>(rng() % m.out_dim()),
                    static_cast<uint32_t>(rng() % m.in_dim()), random_scalar(rng, f));
    }
    return m;
}

// Determinant of a matrix of polynomials by cofactor expansion; used as the
// independent route for characteristic polynomials.
Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly acc;
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        std::vector<std::vector<Poly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (size_t j = 0; j < n; ++j) {
                if (j != k) row.push_back(m[i][j]);
            }
            minor.push_back(std::move(row));
        }
        Poly term = poly_mul(m[0][k], poly_det(minor));
        acc = sign > 0 ? poly_add(acc, term) : poly_sub(acc, term);
        sign = -sign;
    }
    return acc;
}

Poly char_poly_by_cofactors(const LinearMap& a) {
    const uint32_t n = a.in_dim();
    const Scalar one = Scalar::one(a.field());
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = 0; j < n; ++j) {
            // entry of x*I - A
            m[i][j] = poly_trim({-a.entry(i, j), i == j ? one : Scalar::zero(a.field())});
        }
    }
    return poly_det(m);
}

} // namespace

TEST_CASE("identity and swap laws") {
    std::mt19937_64 rng(3);
    LinearMap f = random_map(rng, Q, 4, 2, 2, 12);
    CHECK(compose(LinearMap::identity(Q, 4, 2), f) == f);
    CHECK(compose(f, LinearMap::identity(Q, 4, 2)) == f);
    LinearMap tau = LinearMap::swap(Q, 3);
    CHECK(compose(tau, tau) == LinearMap::identity(Q, 3, 2));
}

TEST_CASE("swap acts as the transposition on basis tensors") {
    LinearMap tau = LinearMap::swap(Q, 3);
    for (uint32_t i = 0; i < 3; ++i) {
        for (uint32_t j = 0; j < 3; ++j) {
            CHECK(tau.apply(sv_unit(i * 3 + j, Scalar::one(Q))) ==
                  sv_unit(j * 3 + i, Scalar::one(Q)));
        }
    }
}

TEST_CASE("group-algebra associativity via structure constants") {
    // mu of k[Z2]: e_i e_j = e_(i+j mod 2)
    LinearMap mu(Q, 2, 2, 1);
    for (uint32_t i = 0; i < 2; ++i) {
        for (uint32_t j = 0; j < 2; ++j) mu.set_entry((i + j) % 2, i * 2 + j, Scalar::one(Q));
    }
    LinearMap id = LinearMap::identity(Q, 2, 1);
    LinearMap left = compose(mu, tensor(mu, id));
    LinearMap right = compose(mu, tensor(id, mu));

    // independent expansion: (e_i e_j) e_k indexed directly
    LinearMap expect(Q, 2, 3, 1);
    for (uint32_t i = 0; i < 2; ++i) {
        for (uint32_t j = 0; j < 2; ++j) {
            for (uint32_t k = 0; k < 2; ++k) {
                expect.set_entry((i + j + k) % 2, (i * 2 + j) * 2 + k, Scalar::one(Q));
            }
        }
    }
    CHECK(left == expect);
    CHECK(right == expect);
}

TEST_CASE("tensor matches the Kronecker formula") {
    std::mt19937_64 rng(5);
    const FieldSpec f5 = FieldSpec::prime_field(5);
    LinearMap f = random_map(rng, f5, 3, 1, 1, 6);
    LinearMap g = random_map(rng, f5, 3, 1, 1, 6);
    LinearMap fg = tensor(f, g);
    for (uint32_t rf = 0; rf < 3; ++rf) {
        for (uint32_t rg = 0; rg < 3; ++rg) {
            for (uint32_t cf = 0; cf < 3; ++cf) {
                for (uint32_t cg = 0; cg < 3; ++cg) {
                    CHECK(fg.entry(rf * 3 + rg, cf * 3 + cg) == f.entry(rf, cf) * g.entry(rg, cg));
                }
            }
        }
    }
    // (f (x) g)(e_0 (x) e_1) = f(e_0) (x) g(e_1)
    SparseVec lhs = fg.apply(sv_unit(0 * 3 + 1, Scalar::one(f5)));
    SparseVec rhs;
    for (const auto& [i, a] : f.apply(sv_unit(0, Scalar::one(f5)))) {
        for (const auto& [j, b] : g.apply(sv_unit(1, Scalar::one(f5)))) {
            rhs.emplace_back(i * 3 + j, a * b);
        }
    }
    CHECK(lhs == sv_compress(std::move(rhs)));
}

TEST_CASE("tensor is functorial") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 10; ++t) {
        LinearMap f = random_map(rng, Q, 2, 1, 2, 5);
        LinearMap g = random_map(rng, Q, 2, 2, 1, 5);
        LinearMap h = random_map(rng, Q, 2, 2, 1, 5);
        LinearMap k = random_map(rng, Q, 2, 1, 2, 5);
        CHECK(compose(tensor(f, g), tensor(h, k)) == tensor(compose(f, h), compose(g, k)));
    }
}

TEST_CASE("kernel and image of small frozen examples") {
    LinearMap zero(Q, 2, 1, 1);
    SubspaceBasis kz = kernel_basis(zero);
    CHECK(kz.dim() == 2);
    CHECK(kz.vectors[0] == sv_unit(0, Scalar::one(Q)));
    CHECK(kz.vectors[1] == sv_unit(1, Scalar::one(Q)));
    CHECK(image_basis(zero).dim() == 0);

    CHECK(kernel_basis(LinearMap::identity(Q, 3, 1)).dim() == 0);
    CHECK(image_basis(LinearMap::identity(Q, 3, 1)).dim() == 3);

    LinearMap ones(Q, 2, 1, 1);
    for (uint32_t i = 0; i < 2; ++i) {
        for (uint32_t j = 0; j < 2; ++j) ones.set_entry(i, j, Scalar::one(Q));
    }
    SubspaceBasis k = kernel_basis(ones);
    REQUIRE(k.dim() == 1);
    CHECK(k.vectors[0] ==
          SparseVec{{0, Scalar::one(Q)}, {1, -Scalar::one(Q)}});
    SubspaceBasis im = image_basis(ones);
    REQUIRE(im.dim() == 1);
    CHECK(im.vectors[0] == SparseVec{{0, Scalar::one(Q)}, {1, Scalar::one(Q)}});
}

TEST_CASE("rank-nullity, exact kernels and explicit preimages") {
    std::mt19937_64 rng(17);
    for (const FieldSpec f : {Q, FieldSpec::prime_field(5)}) {
        for (int t = 0; t < 15; ++t) {
            LinearMap m = random_map(rng, f, 3, 2, 1, 10);
            const uint32_t r = rank(m);
            SubspaceBasis ker = kernel_basis(m);
            CHECK(r + ker.dim() == m.in_dim());
            for (const auto& v : ker.vectors) CHECK(sv_is_zero(m.apply(v)));
            for (const auto& v : image_basis(m).vectors) {
                auto pre = solve(m.matrix(), v);
                REQUIRE(pre.has_value());
                CHECK(m.apply(*pre) == v);
            }
        }
    }
}

TEST_CASE("echelon form canonicalizes spanning sets") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        std::vector<SparseVec> gens;
        for (int i = 0; i < 4; ++i) {
            std::vector<std::pair<uint32_t, Scalar>> v;
            for (int j = 0; j < 5; ++j) {
                v.emplace_back(static_cast<uint32_t>(rng() % 8), random_scalar(rng, Q));
            }
            gens.push_back(sv_compress(std::move(v)));
        }
        // second spanning set: shuffled, rescaled, with a sum appended
        std::vector<SparseVec> gens2 = gens;
        std::shuffle(gens2.begin(), gens2.end(), rng);
        gens2[0] = sv_scale(gens2[0], Scalar::rational(3, 7));
        gens2.push_back(sv_add(gens[0], gens[1]));
        CHECK(row_space(Q, 8, gens) == row_space(Q, 8, gens2));
    }
}

TEST_CASE("quotient dimensions and containment") {
    SubspaceBasis z = row_space(Q, 2, {sv_unit(0, Scalar::one(Q)), sv_unit(1, Scalar::one(Q))});
    SubspaceBasis zero{Q, 2, {}};
    CHECK(quotient_dim(z, zero) == 2);
    CHECK(quotient_dim(z, z) == 0);
    SubspaceBasis diag = row_space(Q, 2, {SparseVec{{0, Scalar::one(Q)}, {1, Scalar::one(Q)}}});
    CHECK(quotient_dim(z, diag) == 1);
    CHECK(error_code([&] { quotient_dim(diag, z); }) == "NotContained");
}

TEST_CASE("characteristic polynomial of identity and swap") {
    Poly cp = char_poly(LinearMap::identity(Q, 2, 1));
    CHECK(poly_eq(cp, {Scalar::of(Q, 1), Scalar::of(Q, -2), Scalar::of(Q, 1)}));

    LinearMap tau = LinearMap::swap(Q, 2);
    Poly got = char_poly(tau);
    // independent route: cofactor expansion of x*I - tau
    CHECK(poly_eq(got, char_poly_by_cofactors(tau)));
    // (x-1)^3 (x+1) = x^4 - 2x^3 + 2x - 1
    Poly expect = {Scalar::of(Q, -1), Scalar::of(Q, 2), Scalar::of(Q, 0), Scalar::of(Q, -2),
                   Scalar::of(Q, 1)};
    CHECK(poly_eq(got, expect));
}

TEST_CASE("characteristic polynomial agrees with cofactor expansion on random maps") {
    std::mt19937_64 rng(29);
    for (const FieldSpec f : {Q, FieldSpec::prime_field(7)}) {
        for (int t = 0; t < 8; ++t) {
            LinearMap m = random_map(rng, f, 4, 1, 1, 8);
            CHECK(poly_eq(char_poly(m), char_poly_by_cofactors(m)));
        }
    }
}

TEST_CASE("minimal polynomials") {
    CHECK(poly_eq(min_poly(LinearMap::identity(Q, 3, 1)),
                  {Scalar::of(Q, -1), Scalar::of(Q, 1)}));
    LinearMap nil(Q, 2, 1, 1);
    nil.set_entry(0, 1, Scalar::one(Q));
    CHECK(poly_eq(min_poly(nil), {Scalar::zero(Q), Scalar::zero(Q), Scalar::one(Q)}));
}

TEST_CASE("minimal polynomial divides the characteristic polynomial") {
    std::mt19937_64 rng(31);
    for (const FieldSpec f : {Q, FieldSpec::prime_field(7)}) {
        for (int t = 0; t < 8; ++t) {
            LinearMap m = random_map(rng, f, 4, 1, 1, 6);
            Poly cp = char_poly(m), mp = min_poly(m);
            auto [quot, rem] = poly_divmod(cp, mp);
            CHECK(rem.empty());
            // and the minimal polynomial annihilates the map
            LinearMap acc(f, 4, 1, 1);
            LinearMap pw = LinearMap::identity(f, 4, 1);
            for (const auto& c : mp) {
                acc = acc + pw.scaled(c);
                pw = compose(m, pw);
            }
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("determinant agrees with the characteristic polynomial") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 10; ++t) {
        LinearMap m = random_map(rng, Q, 4, 1, 1, 8);
        Poly cp = char_poly(m);
        Scalar c0 = poly_eval(cp, Scalar::zero(Q)); // det(-A) = (-1)^n det A, n = 4
        CHECK(det(m) == c0);
    }
}

TEST_CASE("shape errors carry stable codes") {
    LinearMap f(Q, 2, 2, 1);
    LinearMap g(Q, 2, 2, 1);
    CHECK(error_code([&] { compose(f, g); }) == "ArityMismatch");
    CHECK(error_code([&] { char_poly(f); }) == "NotSquare");
    CHECK(error_code([&] { min_poly(f); }) == "NotSquare");
    LinearMap h(FieldSpec::prime_field(3), 2, 1, 2);
    CHECK(error_code([&] { compose(f, h); }) == "FieldMismatch");
    CHECK(error_code([&] { tensor(f, h); }) == "FieldMismatch");
    CHECK(error_code([] { ipow(6, 13); }) == "TooLarge");
}

TEST_CASE("hom coordinates round-trip") {
    std::mt19937_64 rng(41);
    LinearMap m = random_map(rng, Q, 3, 2, 1, 7);
    CHECK(LinearMap::from_vec(Q, 3, 2, 1, m.vec()) == m);
}
