#include "adjhopf/deformation.hpp"

namespace adjhopf {

DeformedMap::DeformedMap(LinearMap b, LinearMap p) : base(std::move(b)), pert(std::move(p)) {
    if (base.base_dim() != pert.base_dim() || base.in_arity() != pert.in_arity() ||
        base.out_arity() != pert.out_arity()) {
        fail("ArityMismatch", "deformed map parts have different shapes");
    }
    if (!(base.field() == pert.field())) {
        fail("FieldMismatch", "deformed map parts over different fields");
    }
}

DeformedMap DeformedMap::embed(const LinearMap& b) {
    return DeformedMap(b, LinearMap::zero(b.field(), b.base_dim(), b.in_arity(), b.out_arity()));
}

DeformedMap d_compose(const DeformedMap& g, const DeformedMap& f) {
    return DeformedMap(compose(g.base, f.base),
                       compose(g.base, f.pert) + compose(g.pert, f.base));
}

DeformedMap d_tensor(const DeformedMap& f, const DeformedMap& g) {
    return DeformedMap(tensor(f.base, g.base), tensor(f.base, g.pert) + tensor(f.pert, g.base));
}

DeformedMap d_add(const DeformedMap& a, const DeformedMap& b) {
    return DeformedMap(a.base + b.base, a.pert + b.pert);
}

DeformedMap d_sub(const DeformedMap& a, const DeformedMap& b) {
    return DeformedMap(a.base - b.base, a.pert - b.pert);
}

namespace {

const LinearMap& phi_block(const Cochain& phi) {
    if (phi.degree != 2 || phi.blocks.size() != 1 || phi.blocks[0].in_arity() != 2 ||
        phi.blocks[0].out_arity() != 1) {
        fail("ArityMismatch", "deformation direction must be a degree-2 cochain (arity 2 -> 1)");
    }
    return phi.blocks[0];
}

} // namespace

DeformedMap deformed_ad(const HopfAlgebra& h, const Cochain& phi) {
    return DeformedMap(adjoint_map(h), phi_block(phi));
}

// Truncated power series of maps, coefficients[i] carrying t^i.
namespace {

using MapSeries = std::vector<LinearMap>;

MapSeries s_embed(const LinearMap& m, size_t order) {
    MapSeries s;
    s.push_back(m);
    while (s.size() < order) {
        s.push_back(LinearMap::zero(m.field(), m.base_dim(), m.in_arity(), m.out_arity()));
    }
    return s;
}

MapSeries s_compose(const MapSeries& g, const MapSeries& f) {
    const size_t order = g.size();
    MapSeries out;
    for (size_t k = 0; k < order; ++k) {
        LinearMap acc = compose(g[0], f[k]);
        for (size_t i = 1; i <= k; ++i) acc = acc + compose(g[i], f[k - i]);
        out.push_back(std::move(acc));
    }
    return out;
}

MapSeries s_tensor(const MapSeries& f, const MapSeries& g) {
    const size_t order = f.size();
    MapSeries out;
    for (size_t k = 0; k < order; ++k) {
        LinearMap acc = tensor(f[0], g[k]);
        for (size_t i = 1; i <= k; ++i) acc = acc + tensor(f[i], g[k - i]);
        out.push_back(std::move(acc));
    }
    return out;
}

MapSeries s_sub(const MapSeries& a, const MapSeries& b) {
    MapSeries out;
    for (size_t k = 0; k < a.size(); ++k) out.push_back(a[k] - b[k]);
    return out;
}

} // namespace

std::pair<std::vector<LinearMap>, std::vector<LinearMap>> adjoint_condition_defects(
    const HopfAlgebra& h, const std::vector<LinearMap>& higher) {
    h.require_lawful();
    const size_t order = higher.size() + 2;
    const FieldSpec f = h.field();
    const uint32_t d = h.dim();

    MapSeries adt = s_embed(adjoint_map(h), order);
    for (size_t i = 0; i < higher.size(); ++i) {
        if (higher[i].in_arity() != 2 || higher[i].out_arity() != 1 || higher[i].base_dim() != d) {
            fail("ArityMismatch", "deformation terms must have arity 2 -> 1");
        }
        adt[i + 1] = adt[i + 1] + higher[i];
    }
    MapSeries id = s_embed(LinearMap::identity(f, d, 1), order);
    MapSeries tau = s_embed(LinearMap::swap(f, d), order);
    MapSeries mu = s_embed(h.mu(), order);
    MapSeries delta = s_embed(h.delta(), order);

    // ad_t(ad_t (x) 1) - ad_t(1 (x) mu)
    MapSeries defect1 =
        s_sub(s_compose(adt, s_tensor(adt, id)), s_compose(adt, s_tensor(id, mu)));

    // (ad_t (x) mu)(1 (x) tau (x) 1)(delta (x) delta)
    //   - (1 (x) mu)(tau (x) 1)(1 (x) delta)(1 (x) ad_t)(tau (x) 1)(1 (x) delta)
    MapSeries lhs = s_compose(
        s_compose(s_tensor(adt, mu), s_tensor(s_tensor(id, tau), id)), s_tensor(delta, delta));
    MapSeries rhs = s_compose(
        s_compose(
            s_compose(s_compose(s_compose(s_tensor(id, mu), s_tensor(tau, id)),
                                s_tensor(id, delta)),
                      s_tensor(id, adt)),
            s_tensor(tau, id)),
        s_tensor(id, delta));
    MapSeries defect2 = s_sub(lhs, rhs);

    return {std::move(defect1), std::move(defect2)};
}

Residuals residuals(const HopfAlgebra& h, const Cochain& phi) {
    auto [d1, d2] = adjoint_condition_defects(h, {phi_block(phi)});
    // degree-0 parts are the adjoint conditions of ad itself
    if (!d1[0].is_zero() || !d2[0].is_zero()) {
        fail("MalformedAlgebra", "adjoint conditions fail for the undeformed map");
    }
    return Residuals{std::move(d1[1]), std::move(d2[1])};
}

DeformedMap deformed_r_matrix(const HopfAlgebra& h, const Cochain& phi) {
    const FieldSpec f = h.field();
    const uint32_t d = h.dim();
    DeformedMap adt = deformed_ad(h, phi);
    DeformedMap id = DeformedMap::embed(LinearMap::identity(f, d, 1));
    DeformedMap tau = DeformedMap::embed(LinearMap::swap(f, d));
    DeformedMap delta = DeformedMap::embed(h.delta());
    return d_compose(d_compose(d_tensor(id, adt), d_tensor(tau, id)), d_tensor(id, delta));
}

bool check_deformed_ybe(const HopfAlgebra& h, const Cochain& phi) {
    DeformedMap r = deformed_r_matrix(h, phi);
    DeformedMap id = DeformedMap::embed(LinearMap::identity(h.field(), h.dim(), 1));
    DeformedMap r1 = d_tensor(r, id);
    DeformedMap r2 = d_tensor(id, r);
    return d_compose(d_compose(r1, r2), r1) == d_compose(d_compose(r2, r1), r2);
}

} // namespace adjhopf
