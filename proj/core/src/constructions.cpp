#include "adjhopf/constructions.hpp"

namespace adjhopf {

HopfAlgebra group_algebra(const FiniteGroup& g, const FieldSpec& field) {
    const uint32_t n = g.order();
    const Scalar one = Scalar::one(field);

    LinearMap mu(field, n, 2, 1);
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = 0; j < n; ++j) {
            mu.set_entry(g.mul(i, j), i * n + j, one);
        }
    }
    LinearMap delta(field, n, 1, 2);
    for (uint32_t i = 0; i < n; ++i) delta.set_entry(i * n + i, i, one);

    LinearMap counit(field, n, 1, 0);
    for (uint32_t i = 0; i < n; ++i) counit.set_entry(0, i, one);

    LinearMap antipode(field, n, 1, 1);
    for (uint32_t i = 0; i < n; ++i) antipode.set_entry(g.inv(i), i, one);

    return HopfAlgebra(field, g.labels(), std::move(mu), std::move(delta),
                       sv_unit(g.identity(), one), std::move(counit), std::move(antipode));
}

HopfAlgebra function_algebra(const FiniteGroup& g, const FieldSpec& field) {
    const uint32_t n = g.order();
    const Scalar one = Scalar::one(field);

    std::vector<std::string> labels;
    labels.reserve(n);
    for (uint32_t i = 0; i < n; ++i) labels.push_back("d_" + g.label(i));

    LinearMap mu(field, n, 2, 1);
    for (uint32_t i = 0; i < n; ++i) mu.set_entry(i, i * n + i, one);

    LinearMap delta(field, n, 1, 2);
    for (uint32_t h = 0; h < n; ++h) {
        for (uint32_t u = 0; u < n; ++u) {
            const uint32_t v = g.mul(g.inv(u), h); // uv = h
            delta.add_entry(u * n + v, h, one);
        }
    }

    LinearMap counit(field, n, 1, 0);
    counit.set_entry(0, g.identity(), one); // eps(f) = f(1)

    LinearMap antipode(field, n, 1, 1);
    for (uint32_t i = 0; i < n; ++i) antipode.set_entry(g.inv(i), i, one);

    SparseVec unit;
    for (uint32_t i = 0; i < n; ++i) unit.emplace_back(i, one);

    return HopfAlgebra(field, std::move(labels), std::move(mu), std::move(delta),
                       std::move(unit), std::move(counit), std::move(antipode));
}

HopfAlgebra superline(const FieldSpec& field) {
    if (field.characteristic() == 2) {
        fail("CharTwoUnsupported", "the superline requires 2 to be invertible");
    }
    const Scalar one = Scalar::one(field);
    const Scalar minus = -one;
    // basis order: 1, g, x, gx
    enum { U = 0, G = 1, X = 2, GX = 3 };

    LinearMap mu(field, 4, 2, 1);
    auto set_prod = [&](uint32_t a, uint32_t b, uint32_t out, const Scalar& c) {
        mu.set_entry(out, a * 4 + b, c);
    };
    for (uint32_t a = 0; a < 4; ++a) {
        set_prod(U, a, a, one);
        if (a != U) set_prod(a, U, a, one);
    }
    set_prod(G, G, U, one);
    set_prod(G, X, GX, one);
    set_prod(G, GX, X, one);
    set_prod(X, G, GX, minus);
    set_prod(GX, G, X, minus);
    // x*x, x*gx, gx*x, gx*gx all vanish

    LinearMap delta(field, 4, 1, 2);
    delta.set_entry(U * 4 + U, U, one);
    delta.set_entry(G * 4 + G, G, one);
    delta.set_entry(X * 4 + U, X, one);  // delta(x) = x (x) 1 + g (x) x
    delta.set_entry(G * 4 + X, X, one);
    delta.set_entry(GX * 4 + G, GX, one); // delta(gx) = gx (x) g + 1 (x) gx
    delta.set_entry(U * 4 + GX, GX, one);

    LinearMap counit(field, 4, 1, 0);
    counit.set_entry(0, U, one);
    counit.set_entry(0, G, one);

    LinearMap antipode(field, 4, 1, 1);
    antipode.set_entry(U, U, one);
    antipode.set_entry(G, G, one);
    antipode.set_entry(GX, X, minus); // S(x) = -gx
    antipode.set_entry(X, GX, one);   // S(gx) = x

    return HopfAlgebra(field, {"1", "g", "x", "gx"}, std::move(mu), std::move(delta),
                       sv_unit(U, one), std::move(counit), std::move(antipode));
}

} // namespace adjhopf
