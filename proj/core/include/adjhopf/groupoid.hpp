#pragma once

#include "adjhopf/group.hpp"
#include "adjhopf/sparse.hpp"

namespace adjhopf {

struct GroupoidMorphism {
    uint32_t src = 0;
    uint32_t tgt = 0;
    std::string label;
};

// Finite groupoid with an explicit composition table.  compose(f, g) is
// defined exactly when tgt(f) = src(g) and reads diagrammatically, f then g.
// Associativity, identities and inverses are verified at construction
// (error NotAGroupoid).
class FiniteGroupoid {
public:
    static constexpr uint32_t kNone = 0xffffffffu;

    FiniteGroupoid(std::vector<std::string> objects, std::vector<GroupoidMorphism> morphisms,
                   std::vector<std::vector<uint32_t>> composition);

    uint32_t object_count() const { return static_cast<uint32_t>(objects_.size()); }
    uint32_t morphism_count() const { return static_cast<uint32_t>(mors_.size()); }
    const std::vector<std::string>& objects() const { return objects_; }
    const GroupoidMorphism& morphism(uint32_t i) const { return mors_[i]; }

    bool composable(uint32_t f, uint32_t g) const;
    uint32_t compose(uint32_t f, uint32_t g) const; // error IndexOutOfRange / NotComposable
    uint32_t identity_at(uint32_t object) const { return identity_[object]; }
    uint32_t inverse_of(uint32_t f) const { return inverse_[f]; }

private:
    std::vector<std::string> objects_;
    std::vector<GroupoidMorphism> mors_;
    std::vector<std::vector<uint32_t>> comp_;
    std::vector<uint32_t> identity_;
    std::vector<uint32_t> inverse_;
};

/// Conjugate groupoid of G: objects are group elements, morphism (x,y) runs
/// from x to y^-1 x y, and (x,y) . (x <| y, z) = (x, yz).  Morphism (x,y) has
/// index x*|G| + y.
FiniteGroupoid conjugate_groupoid(const FiniteGroup& g);

// Chain generators of C_m: composable strings (x0, f0, ..., f_(m-1)); m = 0
// gives the bare objects.  Encoded as {x0, f0, ...} index vectors.
std::vector<std::vector<uint32_t>> chain_generators(const FiniteGroupoid& gpd, uint32_t m);

/// Matrix of the boundary C_(m+1) -> C_m,
///   (x1, f1, ..., f_m) + sum_i (-1)^(i+1) (..., f_i f_(i+1), ...)
///   + (-1)^(m+1) (x0, f0, ..., f_(m-1)),
/// on the string bases, for m in 0..3 (error UnsupportedDegree).
SparseMatrix boundary_matrix(const FiniteGroupoid& gpd, uint32_t m, const FieldSpec& field);

/// Degree-n cocycles, n in {1,2,3}: functions on strings of n-1 morphisms
/// annihilating the boundary from strings of n morphisms.  The grading is the
/// adjoint one: n = 2 gives functions a(x0, f0) with
/// a(x1, f1) - a(x0, f0 f1) + a(x0, f0) = 0, whose dimensions over
/// Q, F2, F3, F5, F7 for the conjugate groupoid of S3 are 3, 5, 4, 3, 3;
/// n = 3 gives c(x0, f0, f1) with the four-term condition.
SubspaceBasis groupoid_cocycle_space(const FiniteGroupoid& gpd, int n, const FieldSpec& field);

/// psi(x, y) + psi(x <| y, z) = psi(x, z) + psi(x <| z, y <| z) over all triples.
bool check_rack_2cocycle(const FiniteGroup& g, const std::vector<Scalar>& psi);

/// theta(x,y,z) + theta(x <| z, y <| z, w) + theta(x,z,w)
///   = theta(x <| y, z, w) + theta(x,y,w) + theta(x <| w, y <| w, z <| w).
bool check_rack_3cocycle(const FiniteGroup& g, const std::vector<Scalar>& theta);

/// psi = a, after verifying a(x,y) + a(x <| y, z) - a(x, yz) = 0
/// (error NotACocycle with the failing triple).
std::vector<Scalar> rack_2cocycle_from(const FiniteGroup& g, const std::vector<Scalar>& a);

/// theta(x,y,z) = c(x,y,z) - c(x, z, y <| z), after verifying
/// c(x,y,z) + c(x,yz,w) = c(x <| y, z, w) + c(x,y,zw) (error NotACocycle).
std::vector<Scalar> rack_3cocycle_from(const FiniteGroup& g, const std::vector<Scalar>& c);

} // namespace adjhopf
