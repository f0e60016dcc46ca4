#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "adjhopf/poly.hpp"
#include "adjhopf/sparse.hpp"

namespace adjhopf {

/// base^exp with an overflow guard (error TooLarge past 2^31).
uint64_t ipow(uint32_t base, uint32_t exp);

// Exact linear map between tensor powers H^(x)a -> H^(x)b of a d-dimensional
// space.  The basis of H^(x)k is indexed by tuples (i_1, ..., i_k) linearized
// big-endian: index = sum_m i_m * d^(k-m); H^(x)0 is the ground field.
class LinearMap {
public:
    LinearMap(FieldSpec field, uint32_t base_dim, uint32_t in_arity, uint32_t out_arity);

    static LinearMap zero(const FieldSpec& f, uint32_t d, uint32_t in_arity, uint32_t out_arity);
    static LinearMap identity(const FieldSpec& f, uint32_t d, uint32_t arity);
    /// Permutation of tensor factors: output factor m is input factor slots[m].
    static LinearMap factor_permutation(const FieldSpec& f, uint32_t d,
                                        const std::vector<uint32_t>& slots);
    /// The transposition tau(x (x) y) = y (x) x.
    static LinearMap swap(const FieldSpec& f, uint32_t d);

    const FieldSpec& field() const { return mat_.field(); }
    uint32_t base_dim() const { return base_dim_; }
    uint32_t in_arity() const { return in_arity_; }
    uint32_t out_arity() const { return out_arity_; }
    uint32_t in_dim() const { return mat_.ncols(); }
    uint32_t out_dim() const { return mat_.nrows(); }

    const SparseMatrix& matrix() const { return mat_; }
    SparseMatrix& matrix() { return mat_; }

    Scalar entry(uint32_t row, uint32_t col) const { return mat_.entry(row, col); }
    void set_entry(uint32_t row, uint32_t col, const Scalar& v) { mat_.set_entry(row, col, v); }
    void add_entry(uint32_t row, uint32_t col, const Scalar& v) { mat_.add_entry(row, col, v); }

    SparseVec apply(const SparseVec& v) const { return mat_.apply(v); }
    bool is_zero() const { return mat_.is_zero(); }

    LinearMap operator+(const LinearMap& o) const;
    LinearMap operator-(const LinearMap& o) const;
    LinearMap operator-() const;
    LinearMap scaled(const Scalar& c) const;
    bool operator==(const LinearMap& o) const;
    bool operator!=(const LinearMap& o) const { return !(*this == o); }

    // Hom-space coordinates: elementary maps E_(row,col) are ordered by
    // linearized output then input index, i.e. coordinate = row*in_dim + col.
    SparseVec vec() const;
    static LinearMap from_vec(const FieldSpec& f, uint32_t d, uint32_t in_arity,
                              uint32_t out_arity, const SparseVec& coords);

private:
    uint32_t base_dim_, in_arity_, out_arity_;
    SparseMatrix mat_;
};

/// g after f (errors ArityMismatch / FieldMismatch).
LinearMap compose(const LinearMap& g, const LinearMap& f);
/// compose_chain({f1, f2, f3}) = f1 . f2 . f3 (rightmost applied first).
LinearMap compose_chain(const std::vector<LinearMap>& maps);

/// Kronecker product respecting the big-endian index convention:
/// (f (x) g)(e_i (x) e_j) = f(e_i) (x) g(e_j).
LinearMap tensor(const LinearMap& f, const LinearMap& g);
LinearMap tensor_all(const std::vector<LinearMap>& maps);

SubspaceBasis kernel_basis(const LinearMap& f);
SubspaceBasis image_basis(const LinearMap& f);
uint32_t rank(const LinearMap& f);

/// Monic characteristic polynomial by the division-free Berkowitz algorithm,
/// ascending coefficients (error NotSquare).
Poly char_poly(const LinearMap& f);

/// Monic minimal polynomial: Krylov iteration per basis vector with exact
/// polynomial lcm (error NotSquare).
Poly min_poly(const LinearMap& f);

Scalar det(const LinearMap& f);

} // namespace adjhopf
