#pragma once

#include "adjhopf/cohomology.hpp"

namespace adjhopf {

// Linear map over k[t]/(t^2), stored as base + t * perturbation.  Composition
// and tensor products follow the dual-number rule, so the t^2 term is dropped
// automatically.
struct DeformedMap {
    LinearMap base;
    LinearMap pert;

    DeformedMap(LinearMap b, LinearMap p);
    static DeformedMap embed(const LinearMap& b);

    bool operator==(const DeformedMap& o) const { return base == o.base && pert == o.pert; }
    bool operator!=(const DeformedMap& o) const { return !(*this == o); }
    bool is_zero() const { return base.is_zero() && pert.is_zero(); }
};

DeformedMap d_compose(const DeformedMap& g, const DeformedMap& f);
DeformedMap d_tensor(const DeformedMap& f, const DeformedMap& g);
DeformedMap d_add(const DeformedMap& a, const DeformedMap& b);
DeformedMap d_sub(const DeformedMap& a, const DeformedMap& b);

// First-order obstructions of a deformation ad + t*phi: both vanish exactly
// when the deformed adjoint conditions hold mod t^2.
struct Residuals {
    LinearMap xi1; // 3 -> 1
    LinearMap xi2; // 2 -> 2

    bool is_zero() const { return xi1.is_zero() && xi2.is_zero(); }
};

/// ad_t = ad + t*phi (error ArityMismatch unless phi has arity 2 -> 1).
DeformedMap deformed_ad(const HopfAlgebra& h, const Cochain& phi);

/// The t-coefficients of the two adjoint-condition defects of ad + t*phi,
/// computed with dual-number matrix arithmetic.  Blockwise equal to d2(phi).
Residuals residuals(const HopfAlgebra& h, const Cochain& phi);

/// Defect coefficient lists of the two adjoint conditions for
/// ad + t*higher[0] + t^2*higher[1] + ..., truncated mod t^(n+2) where
/// n = higher.size().  Coefficient 0 always vanishes; when coefficients
/// 1..n vanish too, entry n+1 is the order-(n+1) obstruction pair.
std::pair<std::vector<LinearMap>, std::vector<LinearMap>> adjoint_condition_defects(
    const HopfAlgebra& h, const std::vector<LinearMap>& higher);

/// R_(ad + t*phi) over k[t]/(t^2); the degree-0 part equals r_matrix(h).
DeformedMap deformed_r_matrix(const HopfAlgebra& h, const Cochain& phi);

/// Exact YBE for R_(ad + t*phi) over the dual numbers; true whenever
/// phi is an adjoint 2-cocycle.
bool check_deformed_ybe(const HopfAlgebra& h, const Cochain& phi);

} // namespace adjhopf
