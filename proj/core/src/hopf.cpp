#include "adjhopf/hopf.hpp"

#include <algorithm>

namespace adjhopf {

bool AxiomReport::all_ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.ok; });
}

std::string AxiomReport::first_failure() const {
    for (const auto& c : checks) {
        if (!c.ok) return c.axiom + " at " + c.witness;
    }
    return "";
}

std::string HopfAlgebra::tensor_label(uint32_t arity, uint32_t index) const {
    if (arity == 0) return "k";
    std::vector<uint32_t> t(arity);
    uint32_t rem = index;
    for (uint32_t i = arity; i-- > 0;) {
        t[i] = rem % dim_;
        rem /= dim_;
    }
    std::string out;
    for (uint32_t i = 0; i < arity; ++i) {
        if (i) out += "(x)";
        out += labels_[t[i]];
    }
    return out;
}

namespace {

// First basis input where two maps differ, as a witness label.
std::string first_difference(const HopfAlgebra& h, const LinearMap& a, const LinearMap& b) {
    for (uint32_t j = 0; j < a.in_dim(); ++j) {
        if (a.matrix().col(j) != b.matrix().col(j)) {
            return h.tensor_label(a.in_arity(), j);
        }
    }
    return "";
}

AxiomCheck compare(const HopfAlgebra& h, std::string axiom, const LinearMap& lhs,
                   const LinearMap& rhs) {
    AxiomCheck c{std::move(axiom), true, ""};
    if (lhs != rhs) {
        c.ok = false;
        c.witness = first_difference(h, lhs, rhs);
    }
    return c;
}

} // namespace

HopfAlgebra::HopfAlgebra(FieldSpec field, std::vector<std::string> basis_labels, LinearMap mu,
                         LinearMap delta, SparseVec unit, LinearMap counit, LinearMap antipode)
    : field_(field),
      dim_(mu.base_dim()),
      labels_(std::move(basis_labels)),
      mu_(std::move(mu)),
      delta_(std::move(delta)),
      unit_(std::move(unit)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
    auto shape = [&](const LinearMap& m, uint32_t in, uint32_t out, const char* name) {
        if (!(m.field() == field_) || m.base_dim() != dim_ || m.in_arity() != in ||
            m.out_arity() != out) {
            fail("MalformedAlgebra", std::string(name) + " has wrong shape or field");
        }
    };
    if (dim_ == 0) fail("MalformedAlgebra", "zero-dimensional algebra");
    if (labels_.size() != dim_) fail("MalformedAlgebra", "basis label count != dim");
    shape(mu_, 2, 1, "mu");
    shape(delta_, 1, 2, "delta");
    shape(counit_, 1, 0, "counit");
    shape(antipode_, 1, 1, "antipode");
    for (const auto& [i, v] : unit_) {
        if (i >= dim_) fail("MalformedAlgebra", "unit vector index out of range");
        if (!(v.field() == field_)) fail("MalformedAlgebra", "unit vector field mismatch");
    }
    report_ = check_hopf_axioms(*this);
}

LinearMap HopfAlgebra::unit_map() const {
    LinearMap eta(field_, dim_, 0, 1);
    eta.matrix().set_col(0, unit_);
    return eta;
}

void HopfAlgebra::require_lawful() const {
    if (!report_.all_ok()) {
        fail("MalformedAlgebra", "Hopf axiom fails: " + report_.first_failure());
    }
}

AxiomReport check_hopf_axioms(const HopfAlgebra& h) {
    const FieldSpec f = h.field();
    const uint32_t d = h.dim();
    const LinearMap id = LinearMap::identity(f, d, 1);
    const LinearMap tau = LinearMap::swap(f, d);
    const LinearMap eta = h.unit_map();
    const LinearMap& mu = h.mu();
    const LinearMap& delta = h.delta();
    const LinearMap& eps = h.counit();
    const LinearMap& s = h.antipode();

    AxiomReport rep;

    rep.checks.push_back(compare(h, "associativity", compose(mu, tensor(mu, id)),
                                 compose(mu, tensor(id, mu))));

    {
        AxiomCheck c{"unit", true, ""};
        LinearMap left = compose(mu, tensor(eta, id));  // 1 -> 1
        LinearMap right = compose(mu, tensor(id, eta));
        if (left != id) {
            c.ok = false;
            c.witness = first_difference(h, left, id);
        } else if (right != id) {
            c.ok = false;
            c.witness = first_difference(h, right, id);
        }
        rep.checks.push_back(c);
    }

    rep.checks.push_back(compare(h, "coassociativity", compose(tensor(delta, id), delta),
                                 compose(tensor(id, delta), delta)));

    {
        AxiomCheck c{"counit", true, ""};
        LinearMap left = compose(tensor(eps, id), delta);
        LinearMap right = compose(tensor(id, eps), delta);
        if (left != id) {
            c.ok = false;
            c.witness = first_difference(h, left, id);
        } else if (right != id) {
            c.ok = false;
            c.witness = first_difference(h, right, id);
        }
        rep.checks.push_back(c);
    }

    {
        // Delta is an algebra map: on products as a matrix identity, and on 1.
        AxiomCheck c{"delta_homomorphism", true, ""};
        LinearMap lhs = compose(delta, mu);
        LinearMap rhs = compose_chain(
            {tensor(mu, mu), tensor_all({id, tau, id}), tensor(delta, delta)});
        if (lhs != rhs) {
            c.ok = false;
            c.witness = first_difference(h, lhs, rhs);
        } else {
            SparseVec du = delta.apply(h.unit_vector());
            SparseVec uu;
            for (const auto& [i, vi] : h.unit_vector()) {
                for (const auto& [j, vj] : h.unit_vector()) {
                    uu.emplace_back(i * d + j, vi * vj);
                }
            }
            if (du != sv_compress(std::move(uu))) {
                c.ok = false;
                c.witness = "1";
            }
        }
        rep.checks.push_back(c);
    }

    {
        AxiomCheck c{"counit_homomorphism", true, ""};
        LinearMap lhs = compose(eps, mu);
        LinearMap rhs = tensor(eps, eps);
        if (lhs != rhs) {
            c.ok = false;
            c.witness = first_difference(h, lhs, rhs);
        } else {
            SparseVec eu = eps.apply(h.unit_vector());
            if (eu != sv_unit(0, Scalar::one(f))) {
                c.ok = false;
                c.witness = "1";
            }
        }
        rep.checks.push_back(c);
    }

    {
        AxiomCheck c{"antipode", true, ""};
        LinearMap target = compose(eta, eps); // eta . eps : 1 -> 1
        LinearMap left = compose_chain({mu, tensor(s, id), delta});
        LinearMap right = compose_chain({mu, tensor(id, s), delta});
        if (left != target) {
            c.ok = false;
            c.witness = first_difference(h, left, target);
        } else if (right != target) {
            c.ok = false;
            c.witness = first_difference(h, right, target);
        }
        rep.checks.push_back(c);
    }

    return rep;
}

LinearMap adjoint_map(const HopfAlgebra& h) {
    h.require_lawful();
    const FieldSpec f = h.field();
    const uint32_t d = h.dim();
    const LinearMap id = LinearMap::identity(f, d, 1);
    const LinearMap tau = LinearMap::swap(f, d);
    return compose_chain({h.mu(), tensor(h.mu(), id), tensor_all({h.antipode(), id, id}),
                          tensor(tau, id), tensor(id, h.delta())});
}

std::pair<bool, bool> adjoint_conditions_hold(const HopfAlgebra& h, const LinearMap& candidate) {
    const FieldSpec f = h.field();
    const uint32_t d = h.dim();
    const LinearMap id = LinearMap::identity(f, d, 1);
    const LinearMap tau = LinearMap::swap(f, d);
    const LinearMap& mu = h.mu();
    const LinearMap& delta = h.delta();

    const bool cond1 =
        compose(candidate, tensor(candidate, id)) == compose(candidate, tensor(id, mu));

    LinearMap lhs = compose_chain(
        {tensor(candidate, mu), tensor_all({id, tau, id}), tensor(delta, delta)});
    LinearMap rhs = compose_chain({tensor(id, mu), tensor(tau, id), tensor(id, delta),
                                   tensor(id, candidate), tensor(tau, id), tensor(id, delta)});
    return {cond1, lhs == rhs};
}

std::pair<bool, bool> check_adjoint_conditions(const HopfAlgebra& h) {
    return adjoint_conditions_hold(h, adjoint_map(h));
}

LinearMap r_matrix(const HopfAlgebra& h) {
    const FieldSpec f = h.field();
    const uint32_t d = h.dim();
    const LinearMap id = LinearMap::identity(f, d, 1);
    const LinearMap tau = LinearMap::swap(f, d);
    return compose_chain({tensor(id, adjoint_map(h)), tensor(tau, id), tensor(id, h.delta())});
}

LinearMap r_matrix_inverse(const HopfAlgebra& h) {
    const FieldSpec f = h.field();
    const uint32_t d = h.dim();
    auto sinv_mat = inverse(h.antipode().matrix());
    if (!sinv_mat) fail("AntipodeNotInvertible", "antipode matrix is singular");
    h.require_lawful();
    LinearMap sinv(f, d, 1, 1);
    sinv.matrix() = *sinv_mat;

    const LinearMap id = LinearMap::identity(f, d, 1);
    // b (x) a |-> b_(3) a S^-1(b_(2)) (x) b_(1)
    return compose_chain({tensor(h.mu(), id),
                          tensor_all({h.mu(), id, id}),
                          LinearMap::factor_permutation(f, d, {2, 3, 1, 0}),
                          tensor_all({id, sinv, id, id}),
                          tensor_all({h.delta(), id, id}),
                          tensor(h.delta(), id)});
}

bool check_ybe(const LinearMap& r) {
    if (r.in_arity() != 2 || r.out_arity() != 2) {
        fail("ArityMismatch", "YBE check requires an arity 2 -> 2 map");
    }
    const LinearMap id = LinearMap::identity(r.field(), r.base_dim(), 1);
    const LinearMap r1 = tensor(r, id);
    const LinearMap r2 = tensor(id, r);
    return compose_chain({r1, r2, r1}) == compose_chain({r2, r1, r2});
}

} // namespace adjhopf
