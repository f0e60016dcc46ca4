#include "adjhopf/cohomology.hpp"

#include <algorithm>

namespace adjhopf {

bool Cochain::is_zero() const {
    return std::all_of(blocks.begin(), blocks.end(),
                       [](const LinearMap& b) { return b.is_zero(); });
}

namespace {

void reject_char2(const FieldSpec& f) {
    if (f.characteristic() == 2) {
        fail("CharTwoUnsupported", "adjoint cohomology requires 2 to be invertible");
    }
}

void expect_block(const Cochain& c, int degree, size_t count) {
    if (c.degree != degree || c.blocks.size() != count) {
        fail("ArityMismatch", "cochain is not a degree-" + std::to_string(degree) + " element");
    }
}

void expect_arity(const LinearMap& m, uint32_t in, uint32_t out) {
    if (m.in_arity() != in || m.out_arity() != out) {
        fail("ArityMismatch", "cochain block has arity " + std::to_string(m.in_arity()) + " -> " +
                                  std::to_string(m.out_arity()) + ", expected " +
                                  std::to_string(in) + " -> " + std::to_string(out));
    }
}

} // namespace

// Structure maps and the constant composites flanking the cochain slot in
// each differential formula.
struct Differentials::Impl {
    const HopfAlgebra& h;
    FieldSpec f;
    LinearMap id, id2, tau, mu, delta, ad, r;
    LinearMap id_mu_id, ad_id_id, id_id_mu, id_mu, id_delta;
    LinearMap pre22, post22; // (1 (x) tau (x) 1)(delta (x) delta), (1 (x) mu)(tau (x) 1)
    LinearMap tau_delta;     // (tau (x) 1)(1 (x) delta)
    LinearMap c32_t1, c32_t2_pre, c32_t3_post, c32_t3_pre, c32_t4_pre;
    LinearMap c33_t1_post;

    explicit Impl(const HopfAlgebra& hh)
        : h(hh),
          f(hh.field()),
          id(LinearMap::identity(f, hh.dim(), 1)),
          id2(LinearMap::identity(f, hh.dim(), 2)),
          tau(LinearMap::swap(f, hh.dim())),
          mu(hh.mu()),
          delta(hh.delta()),
          ad(adjoint_map(hh)),
          r(r_matrix(hh)),
          id_mu_id(tensor_all({id, mu, id})),
          ad_id_id(tensor_all({ad, id, id})),
          id_id_mu(tensor_all({id, id, mu})),
          id_mu(tensor(id, mu)),
          id_delta(tensor(id, delta)),
          pre22(compose(tensor_all({id, tau, id}), tensor(delta, delta))),
          post22(compose(id_mu, tensor(tau, id))),
          tau_delta(compose(tensor(tau, id), id_delta)),
          c32_t1(compose_chain({tensor(ad, mu), tensor_all({id, tau, id}),
                                tensor(id2, delta)})),
          c32_t2_pre(tensor(r, id)),
          c32_t3_post(compose_chain({id_mu, tensor(id2, mu), tensor_all({tau, id, id}),
                                     tensor_all({id, tau, id}), tensor(id2, delta)})),
          c32_t3_pre(compose_chain({tensor_all({id, tau, id, id}),
                                    tensor_all({tau, id, id, id}),
                                    tensor_all({id, id, tau, id}),
                                    tensor_all({id, delta, delta})})),
          c32_t4_pre(compose_chain({tensor_all({id, id, tau, id}),
                                    tensor_all({id, id, mu, id, id}),
                                    tensor_all({id, tau, id, id, id}),
                                    tensor_all({delta, delta, delta})})),
          c33_t1_post(compose_chain({tensor_all({id, mu, id}), tensor_all({tau, id, id}),
                                     tensor_all({id, delta, id})})) {}
};

Differentials::Differentials(const HopfAlgebra& h) {
    reject_char2(h.field());
    h.require_lawful();
    impl_ = std::make_unique<Impl>(h);
}

Differentials::~Differentials() = default;
Differentials::Differentials(Differentials&&) noexcept = default;
Differentials& Differentials::operator=(Differentials&&) noexcept = default;

const HopfAlgebra& Differentials::algebra() const { return impl_->h; }
const LinearMap& Differentials::adjoint() const { return impl_->ad; }

Cochain Differentials::d1(const Cochain& c) const {
    const Impl& x = *impl_;
    expect_block(c, 1, 1);
    const LinearMap& f = c.blocks[0];
    expect_arity(f, 1, 1);
    if (!in_c1(x.h, f)) {
        fail("NotInC1", "degree-1 cochain violates the C^1 membership constraints");
    }
    LinearMap out =
        compose(x.ad, tensor(x.id, f)) - compose(f, x.ad) + compose(x.ad, tensor(f, x.id));
    return Cochain{2, {std::move(out)}};
}

Cochain Differentials::d2(const Cochain& c) const {
    const Impl& x = *impl_;
    expect_block(c, 2, 1);
    const LinearMap& phi = c.blocks[0];
    expect_arity(phi, 2, 1);

    LinearMap d21 = compose(x.ad, tensor(phi, x.id)) + compose(phi, tensor(x.ad, x.id)) -
                    compose(phi, x.id_mu);
    LinearMap d22 = compose(tensor(phi, x.mu), x.pre22) -
                    compose_chain({x.post22, x.id_delta, tensor(x.id, phi), x.tau_delta});
    return Cochain{3, {std::move(d21), std::move(d22)}};
}

D3Image Differentials::d3(const Cochain& c) const {
    const Impl& x = *impl_;
    expect_block(c, 3, 2);
    const LinearMap& xi1 = c.blocks[0];
    const LinearMap& xi2 = c.blocks[1];
    expect_arity(xi1, 3, 1);
    expect_arity(xi2, 2, 2);

    LinearMap c1 = compose(x.ad, tensor(xi1, x.id)) + compose(xi1, x.id_mu_id) -
                   compose(xi1, x.ad_id_id) - compose(xi1, x.id_id_mu);

    LinearMap t1 = compose(x.c32_t1, tensor(xi2, x.id));
    LinearMap t2 = compose_chain({x.post22, tensor(x.id, xi2), x.c32_t2_pre});
    LinearMap t3 = compose(x.c32_t3_post, compose(tensor(x.id2, xi1), x.c32_t3_pre));
    LinearMap t4 = compose(tensor(xi1, x.mu), x.c32_t4_pre);
    LinearMap t5 = compose(xi2, x.id_mu);
    LinearMap c2 = t1 + t2 + t3 - t4 - t5;

    LinearMap u1 = compose(x.c33_t1_post, compose(tensor(x.id, xi2), x.tau_delta));
    LinearMap u2 = compose(tensor(xi2, x.mu), x.pre22);
    LinearMap u3 = compose(x.id_delta, xi2);
    LinearMap c3 = u1 + u2 - u3;

    return D3Image{std::move(c1), std::move(c2), std::move(c3)};
}

namespace {

// The two C^1 membership defects of f.
std::pair<LinearMap, LinearMap> c1_defects(const HopfAlgebra& h, const LinearMap& f) {
    const LinearMap id = LinearMap::identity(h.field(), h.dim(), 1);
    const LinearMap& mu = h.mu();
    const LinearMap& delta = h.delta();
    LinearMap dmu = compose(f, mu) - compose(mu, tensor(f, id)) - compose(mu, tensor(id, f));
    LinearMap ddelta =
        compose(delta, f) - compose(tensor(f, id), delta) - compose(tensor(id, f), delta);
    return {std::move(dmu), std::move(ddelta)};
}

} // namespace

bool in_c1(const HopfAlgebra& h, const LinearMap& f) {
    auto [dmu, ddelta] = c1_defects(h, f);
    return dmu.is_zero() && ddelta.is_zero();
}

SubspaceBasis c1_basis(const HopfAlgebra& h) {
    reject_char2(h.field());
    h.require_lawful();
    const uint32_t d = h.dim();
    const uint32_t homdim = d * d;
    const uint32_t block = d * d * d;
    SparseMatrix constraints(h.field(), 2 * block, homdim);
    for (uint32_t coord = 0; coord < homdim; ++coord) {
        LinearMap f = LinearMap::from_vec(h.field(), d, 1, 1, sv_unit(coord, Scalar::one(h.field())));
        auto [dmu, ddelta] = c1_defects(h, f);
        std::vector<std::pair<uint32_t, Scalar>> col;
        for (const auto& [i, v] : dmu.vec()) col.emplace_back(i, v);
        for (const auto& [i, v] : ddelta.vec()) col.emplace_back(block + i, v);
        constraints.set_col(coord, sv_compress(std::move(col)));
    }
    return kernel_basis(constraints);
}

Cochain d1(const HopfAlgebra& h, const Cochain& f) { return Differentials(h).d1(f); }
Cochain d2(const HopfAlgebra& h, const Cochain& phi) { return Differentials(h).d2(phi); }
D3Image d3(const HopfAlgebra& h, const Cochain& xi) { return Differentials(h).d3(xi); }

namespace {

SparseMatrix d1_matrix(const Differentials& diff, const SubspaceBasis& c1) {
    const HopfAlgebra& h = diff.algebra();
    const uint32_t d = h.dim();
    SparseMatrix m(h.field(), d * d * d, c1.dim());
    for (uint32_t j = 0; j < c1.dim(); ++j) {
        LinearMap f = LinearMap::from_vec(h.field(), d, 1, 1, c1.vectors[j]);
        m.set_col(j, diff.d1(Cochain{1, {std::move(f)}}).blocks[0].vec());
    }
    return m;
}

SparseMatrix d2_matrix(const Differentials& diff) {
    const HopfAlgebra& h = diff.algebra();
    const uint32_t d = h.dim();
    const uint32_t cdim = d * d * d;          // dim C^2
    const uint32_t block = cdim * d;          // dim Hom(H^3, H) = dim Hom(H^2, H^2)
    SparseMatrix m(h.field(), 2 * block, cdim);
    for (uint32_t coord = 0; coord < cdim; ++coord) {
        LinearMap phi =
            LinearMap::from_vec(h.field(), d, 2, 1, sv_unit(coord, Scalar::one(h.field())));
        Cochain im = diff.d2(Cochain{2, {std::move(phi)}});
        std::vector<std::pair<uint32_t, Scalar>> col;
        for (const auto& [i, v] : im.blocks[0].vec()) col.emplace_back(i, v);
        for (const auto& [i, v] : im.blocks[1].vec()) col.emplace_back(block + i, v);
        m.set_col(coord, sv_compress(std::move(col)));
    }
    return m;
}

SparseMatrix d3_matrix(const Differentials& diff) {
    const HopfAlgebra& h = diff.algebra();
    const uint32_t d = h.dim();
    const uint32_t bdim = d * d * d * d;      // dim of each C^3 block
    const uint32_t tblock = bdim * d;         // dim of each target block
    SparseMatrix m(h.field(), 3 * tblock, 2 * bdim);
    const Scalar one = Scalar::one(h.field());
    for (uint32_t coord = 0; coord < 2 * bdim; ++coord) {
        LinearMap xi1 = LinearMap::zero(h.field(), d, 3, 1);
        LinearMap xi2 = LinearMap::zero(h.field(), d, 2, 2);
        if (coord < bdim) {
            xi1 = LinearMap::from_vec(h.field(), d, 3, 1, sv_unit(coord, one));
        } else {
            xi2 = LinearMap::from_vec(h.field(), d, 2, 2, sv_unit(coord - bdim, one));
        }
        D3Image im = diff.d3(Cochain{3, {std::move(xi1), std::move(xi2)}});
        std::vector<std::pair<uint32_t, Scalar>> col;
        for (const auto& [i, v] : im.c1.vec()) col.emplace_back(i, v);
        for (const auto& [i, v] : im.c2.vec()) col.emplace_back(tblock + i, v);
        for (const auto& [i, v] : im.c3.vec()) col.emplace_back(2 * tblock + i, v);
        m.set_col(coord, sv_compress(std::move(col)));
    }
    return m;
}

} // namespace

SparseMatrix differential_matrix(const HopfAlgebra& h, int n) {
    reject_char2(h.field());
    h.require_lawful();
    Differentials diff(h);
    switch (n) {
        case 1: return d1_matrix(diff, c1_basis(h));
        case 2: return d2_matrix(diff);
        case 3: return d3_matrix(diff);
        default: fail("UnsupportedDegree", "differentials exist for degrees 1..3");
    }
}

CohomologyReport cohomology(const HopfAlgebra& h, int n, const CohomologyOptions& opts) {
    reject_char2(h.field());
    h.require_lawful();
    if (n < 1 || n > 3) fail("UnsupportedDegree", "cohomology is defined for degrees 1..3");
    const uint32_t d = h.dim();
    Differentials diff(h);

    CohomologyReport rep;
    rep.degree = n;

    if (n == 1) {
        SubspaceBasis c1 = c1_basis(h);
        SparseMatrix m1 = d1_matrix(diff, c1);
        SubspaceBasis z = kernel_basis(m1); // coordinates over the C^1 basis
        rep.dim_c = c1.dim();
        rep.dim_z = z.dim();
        rep.dim_b = 0; // C^0 = 0, D_0 = 0
        rep.dim_h = z.dim();
        if (opts.with_basis) {
            for (const auto& k : z.vectors) {
                SparseVec coords;
                for (const auto& [i, c] : k) coords = sv_axpy(coords, c, c1.vectors[i]);
                rep.basis.push_back(
                    Cochain{1, {LinearMap::from_vec(h.field(), d, 1, 1, coords)}});
            }
        }
        return rep;
    }

    if (n == 2) {
        SparseMatrix m2 = d2_matrix(diff);
        SubspaceBasis z = kernel_basis(m2);
        SubspaceBasis b = image_basis(d1_matrix(diff, c1_basis(h)));
        rep.dim_c = d * d * d;
        rep.dim_z = z.dim();
        rep.dim_b = b.dim();
        rep.dim_h = quotient_dim(z, b);
        if (opts.with_basis) {
            for (const auto& k : z.vectors) {
                rep.basis.push_back(Cochain{2, {LinearMap::from_vec(h.field(), d, 2, 1, k)}});
            }
        }
        return rep;
    }

    const uint32_t limit = h.field().is_rationals() ? 4 : 6;
    if (d > limit && !opts.force) {
        const uint64_t rows = 3 * ipow(d, 5), cols = 2 * ipow(d, 4);
        fail("TooLarge", "degree-3 differential needs a " + std::to_string(rows) + " x " +
                             std::to_string(cols) + " matrix; pass force to compute anyway");
    }
    SparseMatrix m3 = d3_matrix(diff);
    SubspaceBasis z = kernel_basis(m3);
    SubspaceBasis b = image_basis(d2_matrix(diff));
    const uint32_t bdim = d * d * d * d;
    rep.dim_c = 2 * bdim;
    rep.dim_z = z.dim();
    rep.dim_b = b.dim();
    rep.dim_h = quotient_dim(z, b);
    if (opts.with_basis) {
        for (const auto& k : z.vectors) {
            SparseVec v1, v2;
            for (const auto& [i, c] : k) {
                if (i < bdim) {
                    v1.emplace_back(i, c);
                } else {
                    v2.emplace_back(i - bdim, c);
                }
            }
            rep.basis.push_back(Cochain{3,
                                        {LinearMap::from_vec(h.field(), d, 3, 1, v1),
                                         LinearMap::from_vec(h.field(), d, 2, 2, v2)}});
        }
    }
    return rep;
}

SubspaceBasis diagonal_2cocycles(const FiniteGroup& g, const FieldSpec& field) {
    reject_char2(field);
    const uint32_t n = g.order();
    const Scalar one = Scalar::one(field);
    SparseMatrix eqs(field, n * n * n, n * n);
    for (uint32_t x = 0; x < n; ++x) {
        for (uint32_t y = 0; y < n; ++y) {
            const uint32_t xy = g.conj(x, y);
            for (uint32_t z = 0; z < n; ++z) {
                const uint32_t row = (x * n + y) * n + z;
                eqs.add_entry(row, x * n + y, one);
                eqs.add_entry(row, xy * n + z, one);
                eqs.add_entry(row, x * n + g.mul(y, z), -one);
            }
        }
    }
    return kernel_basis(eqs);
}

Cochain lift_diagonal_cocycle(const FiniteGroup& g, const FieldSpec& field, const SparseVec& a) {
    const uint32_t n = g.order();
    LinearMap phi(field, n, 2, 1);
    for (const auto& [idx, c] : a) {
        const uint32_t x = idx / n, y = idx % n;
        phi.add_entry(g.conj(x, y), idx, c);
    }
    return Cochain{2, {std::move(phi)}};
}

bool check_group_3cocycle(const FiniteGroup& g, const std::vector<Scalar>& c) {
    const uint32_t n = g.order();
    if (c.size() != size_t(n) * n * n) {
        fail("IndexOutOfRange", "3-cochain must have |G|^3 values");
    }
    auto at = [&](uint32_t x, uint32_t y, uint32_t z) -> const Scalar& {
        return c[(x * n + y) * n + z];
    };
    for (uint32_t x = 0; x < n; ++x) {
        for (uint32_t y = 0; y < n; ++y) {
            const uint32_t xy = g.conj(x, y);
            for (uint32_t z = 0; z < n; ++z) {
                for (uint32_t w = 0; w < n; ++w) {
                    Scalar lhs = at(x, y, z) + at(x, g.mul(y, z), w);
                    Scalar rhs = at(xy, z, w) + at(x, y, g.mul(z, w));
                    if (lhs != rhs) return false;
                }
            }
        }
    }
    return true;
}

std::vector<Scalar> group_3coboundary(const FiniteGroup& g, const std::vector<Scalar>& a) {
    const uint32_t n = g.order();
    if (a.size() != size_t(n) * n) {
        fail("IndexOutOfRange", "2-cochain must have |G|^2 values");
    }
    std::vector<Scalar> c;
    c.reserve(size_t(n) * n * n);
    for (uint32_t x = 0; x < n; ++x) {
        for (uint32_t y = 0; y < n; ++y) {
            const uint32_t xy = g.conj(x, y);
            for (uint32_t z = 0; z < n; ++z) {
                c.push_back(a[x * n + y] + a[xy * n + z] - a[x * n + g.mul(y, z)]);
            }
        }
    }
    return c;
}

} // namespace adjhopf
