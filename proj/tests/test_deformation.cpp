#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adjhopf/deformation.hpp"
#include "test_util.hpp"

using namespace adjhopf;
using testutil::error_code;

namespace {

const FieldSpec Q = FieldSpec::rationals();
enum { U = 0, G = 1, X = 2, GX = 3 };

Cochain superline_alpha() {
    LinearMap phi(Q, 4, 2, 1);
    phi.set_entry(U, G * 4 + X, Scalar::one(Q));
    phi.set_entry(U, G * 4 + GX, Scalar::one(Q));
    phi.set_entry(U, X * 4 + G, -Scalar::one(Q));
    return Cochain{2, {std::move(phi)}};
}

Cochain superline_beta() {
    LinearMap phi(Q, 4, 2, 1);
    phi.set_entry(U, GX * 4 + X, Scalar::one(Q));
    phi.set_entry(U, GX * 4 + GX, -Scalar::one(Q));
    return Cochain{2, {std::move(phi)}};
}

Cochain superline_gamma() {
    LinearMap phi(Q, 4, 2, 1);
    phi.set_entry(G, GX * 4 + G, Scalar::one(Q));
    phi.set_entry(X, GX * 4 + X, Scalar::one(Q));
    phi.set_entry(X, GX * 4 + GX, Scalar::one(Q));
    return Cochain{2, {std::move(phi)}};
}

Cochain random_2cochain(std::mt19937_64& rng, const FieldSpec& f, uint32_t d, int entries) {
    LinearMap phi(f, d, 2, 1);
    for (int i = 0; i < entries; ++i) {
        long c = static_cast<long>(rng() % 9) - 4;
        phi.add_entry(static_cast<uint32_t>(rng() % d),
                      static_cast<uint32_t>(rng() % (d * d)), Scalar::of(f, c));
    }
    return Cochain{2, {std::move(phi)}};
}

// Dense dual-number matrices, used as an independent route for the deformed
// YBE: pairs (A, B) meaning A + tB with (A,B)(C,D) = (AC, AD + BC).
struct DenseDual {
    uint32_t n;
    std::vector<Scalar> a, b; // row-major

    static DenseDual from(const DeformedMap& m) {
        DenseDual out;
        out.n = m.base.in_dim();
        out.a.assign(size_t(out.n) * out.n, Scalar::zero(m.base.field()));
        out.b = out.a;
        for (uint32_t j = 0; j < out.n; ++j) {
            for (const auto& [i, v] : m.base.matrix().col(j)) out.a[i * out.n + j] = v;
            for (const auto& [i, v] : m.pert.matrix().col(j)) out.b[i * out.n + j] = v;
        }
        return out;
    }

    DenseDual mul(const DenseDual& o, const FieldSpec& f) const {
        DenseDual out;
        out.n = n;
        out.a.assign(size_t(n) * n, Scalar::zero(f));
        out.b = out.a;
        for (uint32_t i = 0; i < n; ++i) {
            for (uint32_t k = 0; k < n; ++k) {
                for (uint32_t j = 0; j < n; ++j) {
                    out.a[i * n + j] += a[i * n + k] * o.a[k * n + j];
                    out.b[i * n + j] += a[i * n + k] * o.b[k * n + j] +
                                        b[i * n + k] * o.a[k * n + j];
                }
            }
        }
        return out;
    }

    bool operator==(const DenseDual& o) const { return a == o.a && b == o.b; }
};

bool dense_deformed_ybe(const HopfAlgebra& h, const Cochain& phi) {
    DeformedMap r = deformed_r_matrix(h, phi);
    DeformedMap id = DeformedMap::embed(LinearMap::identity(h.field(), h.dim(), 1));
    DenseDual r1 = DenseDual::from(d_tensor(r, id));
    DenseDual r2 = DenseDual::from(d_tensor(id, r));
    const FieldSpec f = h.field();
    return r1.mul(r2, f).mul(r1, f) == r2.mul(r1, f).mul(r2, f);
}

} // namespace

TEST_CASE("the zero direction gives the trivial deformation") {
    auto h = superline(Q);
    Cochain zero{2, {LinearMap(Q, 4, 2, 1)}};
    DeformedMap adt = deformed_ad(h, zero);
    CHECK(adt.base == adjoint_map(h));
    CHECK(adt.pert.is_zero());
    Residuals res = residuals(h, zero);
    CHECK(res.is_zero());
    DeformedMap r = deformed_r_matrix(h, zero);
    CHECK(r.base == r_matrix(h));
    CHECK(r.pert.is_zero());
    CHECK(check_deformed_ybe(h, zero));
}

TEST_CASE("gamma direction has the expected support") {
    auto h = superline(Q);
    DeformedMap adt = deformed_ad(h, superline_gamma());
    const Scalar one = Scalar::one(Q);
    CHECK(adt.pert.matrix().col(GX * 4 + G) == sv_unit(G, one));
    CHECK(adt.pert.matrix().col(GX * 4 + X) == sv_unit(X, one));
    CHECK(adt.pert.matrix().col(GX * 4 + GX) == sv_unit(X, one));
    CHECK(adt.pert.matrix().nnz() == 3);
}

TEST_CASE("cocycle directions have vanishing residuals") {
    auto h = superline(Q);
    for (const Cochain& c : {superline_alpha(), superline_beta(), superline_gamma()}) {
        CHECK(residuals(h, c).is_zero());
    }
}

TEST_CASE("residuals equal the second differential blockwise") {
    std::mt19937_64 rng(59);
    auto sl = superline(Q);
    auto kz3 = group_algebra(FiniteGroup::cyclic(3), Q);
    for (const HopfAlgebra* h : {&sl, &kz3}) {
        Differentials diff(*h);
        for (int t = 0; t < 15; ++t) {
            Cochain phi = random_2cochain(rng, Q, h->dim(), 5);
            Residuals res = residuals(*h, phi);
            Cochain im = diff.d2(phi);
            CHECK(res.xi1 == im.blocks[0]);
            CHECK(res.xi2 == im.blocks[1]);
        }
    }
}

TEST_CASE("deformed R-matrix is R_ad plus t times the phi composite") {
    auto h = superline(Q);
    Cochain alpha = superline_alpha();
    DeformedMap r = deformed_r_matrix(h, alpha);
    CHECK(r.base == r_matrix(h));
    // t-part = (1 (x) phi)(tau (x) 1)(1 (x) delta) by linearity in the ad slot
    LinearMap id = LinearMap::identity(Q, 4, 1);
    LinearMap tau = LinearMap::swap(Q, 4);
    LinearMap expected = compose_chain(
        {tensor(id, alpha.blocks[0]), tensor(tau, id), tensor(id, h.delta())});
    CHECK(r.pert == expected);
}

TEST_CASE("deformed YBE holds along the cocycle table") {
    auto h = superline(Q);
    for (const Cochain& c : {superline_alpha(), superline_beta(), superline_gamma()}) {
        CHECK(check_deformed_ybe(h, c));
        CHECK(dense_deformed_ybe(h, c));
    }
}

TEST_CASE("deformed YBE holds for lifted diagonal cocycles of kS3") {
    auto s3 = FiniteGroup::symmetric(3);
    auto h = group_algebra(s3, Q);
    auto diag = diagonal_2cocycles(s3, Q);
    REQUIRE(diag.dim() == 3);
    for (const auto& a : diag.vectors) {
        CHECK(check_deformed_ybe(h, lift_diagonal_cocycle(s3, Q, a)));
    }
}

TEST_CASE("deformed YBE is closed under linear combinations of cocycles") {
    std::mt19937_64 rng(61);
    auto h = superline(Q);
    auto table = {superline_alpha(), superline_beta(), superline_gamma()};
    for (int t = 0; t < 10; ++t) {
        LinearMap combo(Q, 4, 2, 1);
        for (const Cochain& c : table) {
            combo = combo + c.blocks[0].scaled(Scalar::of(Q, static_cast<long>(rng() % 9) - 4));
        }
        CHECK(check_deformed_ybe(h, Cochain{2, {combo}}));
    }
}

TEST_CASE("a non-cocycle direction breaks the deformed YBE") {
    auto h = superline(Q);
    LinearMap phi(Q, 4, 2, 1);
    phi.set_entry(U, G * 4 + X, Scalar::one(Q)); // one corner of alpha only
    Cochain c{2, {phi}};
    CHECK_FALSE(d2(h, c).is_zero());
    const bool dense = dense_deformed_ybe(h, c);
    CHECK(check_deformed_ybe(h, c) == dense);
    CHECK_FALSE(dense);
}

TEST_CASE("higher-order defect lists") {
    auto h = superline(Q);
    // no deformation terms: both defects vanish identically mod t^2
    auto [d1, d2] = adjoint_condition_defects(h, {});
    REQUIRE(d1.size() == 2);
    for (const auto& m : d1) CHECK(m.is_zero());
    for (const auto& m : d2) CHECK(m.is_zero());

    // a cocycle in degree 1 leaves only the t^2 coefficient free
    auto [e1, e2] = adjoint_condition_defects(h, {superline_beta().blocks[0]});
    REQUIRE(e1.size() == 3);
    CHECK(e1[0].is_zero());
    CHECK(e1[1].is_zero());
    CHECK(e2[0].is_zero());
    CHECK(e2[1].is_zero());
}

TEST_CASE("shape errors") {
    auto h = superline(Q);
    CHECK(error_code([&] { deformed_ad(h, Cochain{2, {LinearMap(Q, 4, 1, 1)}}); }) ==
          "ArityMismatch");
    CHECK(error_code([&] {
              DeformedMap(LinearMap(Q, 4, 2, 1), LinearMap(Q, 4, 1, 1));
          }) == "ArityMismatch");
}
