#pragma once

#include <memory>

#include "adjhopf/constructions.hpp"

namespace adjhopf {

// Graded element of the adjoint cochain complex.  Blocks by degree:
//   n = 1: one map 1 -> 1 (subject to the two C^1 membership constraints)
//   n = 2: one map 2 -> 1
//   n = 3: pair (xi1: 3 -> 1, xi2: 2 -> 2)
struct Cochain {
    int degree = 0;
    std::vector<LinearMap> blocks;

    bool is_zero() const;
};

// Value of the third differential.  The target is the direct sum
// Hom(H^(x)4, H) (+) Hom(H^(x)3, H^(x)2) (+) Hom(H^(x)2, H^(x)3); the third
// summand falls outside the i <= n+1-i grading but is where d^{3,3} lands.
struct D3Image {
    LinearMap c1, c2, c3; // arities 4->1, 3->2, 2->3

    bool is_zero() const { return c1.is_zero() && c2.is_zero() && c3.is_zero(); }
};

struct CohomologyReport {
    int degree = 0;
    uint32_t dim_c = 0;
    uint32_t dim_z = 0;
    uint32_t dim_b = 0;
    uint32_t dim_h = 0;
    std::vector<Cochain> basis; // cocycle basis, when requested
};

struct CohomologyOptions {
    bool with_basis = false;
    // Degree-3 ambient sizes are computed only for d <= 4 over Q and d <= 6
    // over F_p unless forced (error TooLarge otherwise).
    bool force = false;
};

// Evaluator for the differentials of one algebra.  Precomputes ad, R_ad and
// the constant composites flanking the cochain slot in each formula, so a
// whole chain-group basis can be pushed through column by column without
// assembling any D_n matrix.
class Differentials {
public:
    explicit Differentials(const HopfAlgebra& h);
    ~Differentials();
    Differentials(Differentials&&) noexcept;
    Differentials& operator=(Differentials&&) noexcept;

    const HopfAlgebra& algebra() const;
    const LinearMap& adjoint() const;

    Cochain d1(const Cochain& f) const;
    Cochain d2(const Cochain& phi) const;
    D3Image d3(const Cochain& xi) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Basis of C^1 = { f : f mu = mu(f (x) 1) + mu(1 (x) f),
///                      delta f = (f (x) 1) delta + (1 (x) f) delta },
/// as vectors in Hom(H,H) coordinates.
SubspaceBasis c1_basis(const HopfAlgebra& h);

bool in_c1(const HopfAlgebra& h, const LinearMap& f);

/// d^{1,1}(f) = ad(1 (x) f) - f ad + ad(f (x) 1)  (error NotInC1).
Cochain d1(const HopfAlgebra& h, const Cochain& f);

/// d^{2,1}(phi) = ad(phi (x) 1) + phi(ad (x) 1) - phi(1 (x) mu)
/// d^{2,2}(phi) = (phi (x) mu)(1 (x) tau (x) 1)(delta (x) delta)
///              - (1 (x) mu)(tau (x) 1)(1 (x) delta)(1 (x) phi)(tau (x) 1)(1 (x) delta)
Cochain d2(const HopfAlgebra& h, const Cochain& phi);

/// The three components d^{3,1}, d^{3,2} (with its R_ad term), d^{3,3}.
D3Image d3(const HopfAlgebra& h, const Cochain& xi);

/// The assembled matrix of D_n on the chain-group bases (columns ordered by
/// Hom-space coordinates; degree 1 columns run over the c1_basis vectors).
SparseMatrix differential_matrix(const HopfAlgebra& h, int n);

/// Z^n = Ker D_n, B^n = Image D_(n-1) with C^0 = 0, H^n = Z^n / B^n.
CohomologyReport cohomology(const HopfAlgebra& h, int n, const CohomologyOptions& opts = {});

/// Solution space of a(x,y) + a(x <| y, z) - a(x, yz) = 0 over all triples;
/// unknowns a(x,y) indexed x*|G| + y.  Each solution lifts to the 2-cocycle
/// phi(x (x) y) = a(x,y) * (x <| y) of the group algebra.
SubspaceBasis diagonal_2cocycles(const FiniteGroup& g, const FieldSpec& field);

/// The lift above.
Cochain lift_diagonal_cocycle(const FiniteGroup& g, const FieldSpec& field, const SparseVec& a);

/// c(x,y,z) + c(x,yz,w) = c(x <| y, z, w) + c(x,y,zw) over all quadruples;
/// c indexed (x*|G| + y)*|G| + z.
bool check_group_3cocycle(const FiniteGroup& g, const std::vector<Scalar>& c);

/// c(x,y,z) = a(x,y) + a(x <| y, z) - a(x,yz); always a 3-cocycle.
std::vector<Scalar> group_3coboundary(const FiniteGroup& g, const std::vector<Scalar>& a);

} // namespace adjhopf
