#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adjhopf/linmap.hpp"

namespace adjhopf {

// Result of verifying the Hopf axioms, one entry per axiom, with the first
// failing basis input as witness when an axiom does not hold.
struct AxiomCheck {
    std::string axiom;
    bool ok = true;
    std::string witness; // empty when ok
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool all_ok() const;
    std::string first_failure() const; // "" when all pass
};

// Finite-dimensional Hopf algebra by structure constants: mu (2->1),
// delta (1->2), unit vector (image of 1), counit (1->0), antipode (1->1).
// Shapes and fields are validated eagerly (error MalformedAlgebra); the full
// axiom report is computed at construction and cached, so downstream
// operations can insist on a lawful algebra up front.
class HopfAlgebra {
public:
    HopfAlgebra(FieldSpec field, std::vector<std::string> basis_labels, LinearMap mu,
                LinearMap delta, SparseVec unit, LinearMap counit, LinearMap antipode);

    const FieldSpec& field() const { return field_; }
    uint32_t dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }

    const LinearMap& mu() const { return mu_; }
    const LinearMap& delta() const { return delta_; }
    const SparseVec& unit_vector() const { return unit_; }
    const LinearMap& counit() const { return counit_; }
    const LinearMap& antipode() const { return antipode_; }
    /// eta as an arity 0 -> 1 map.
    LinearMap unit_map() const;

    const AxiomReport& axiom_report() const { return report_; }
    bool is_hopf() const { return report_.all_ok(); }
    /// Errors MalformedAlgebra when an axiom fails.
    void require_lawful() const;

    /// "g(x)x" style label of a tensor basis element.
    std::string tensor_label(uint32_t arity, uint32_t index) const;

private:
    FieldSpec field_;
    uint32_t dim_;
    std::vector<std::string> labels_;
    LinearMap mu_, delta_;
    SparseVec unit_;
    LinearMap counit_, antipode_;
    AxiomReport report_;
};

/// Verifies all seven Hopf axioms as exact matrix identities.
AxiomReport check_hopf_axioms(const HopfAlgebra& h);

/// ad(x (x) y) = S(y_(1)) x y_(2) as the composite
/// mu (mu (x) 1)(S (x) 1 (x) 1)(tau (x) 1)(1 (x) delta), arity 2 -> 1.
LinearMap adjoint_map(const HopfAlgebra& h);

/// The two adjoint conditions:
///   (1) ad(ad (x) 1) = ad(1 (x) mu)
///   (2) (ad (x) mu)(1 (x) tau (x) 1)(delta (x) delta)
///       = (1 (x) mu)(tau (x) 1)(1 (x) delta)(1 (x) ad)(tau (x) 1)(1 (x) delta)
/// Both hold for every lawful Hopf algebra.
std::pair<bool, bool> check_adjoint_conditions(const HopfAlgebra& h);

/// Same two identities evaluated for an arbitrary candidate in place of ad.
std::pair<bool, bool> adjoint_conditions_hold(const HopfAlgebra& h, const LinearMap& candidate);

/// R_ad = (1 (x) ad)(tau (x) 1)(1 (x) delta), arity 2 -> 2.
LinearMap r_matrix(const HopfAlgebra& h);

/// R_ad^-1 (b (x) a) = b_(3) a S^-1(b_(2)) (x) b_(1)
/// (error AntipodeNotInvertible when S is singular).
LinearMap r_matrix_inverse(const HopfAlgebra& h);

/// (R (x) 1)(1 (x) R)(R (x) 1) = (1 (x) R)(R (x) 1)(1 (x) R) on H^(x)3
/// (error ArityMismatch unless R has arity 2 -> 2).
bool check_ybe(const LinearMap& r);

} // namespace adjhopf
