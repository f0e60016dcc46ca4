#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "adjhopf/scalar.hpp"

namespace adjhopf {

// Sparse vector: (index, value) pairs sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<uint32_t, Scalar>>;

SparseVec sv_unit(uint32_t index, const Scalar& value);
Scalar sv_get(const SparseVec& v, uint32_t index, const FieldSpec& field);
bool sv_is_zero(const SparseVec& v);
SparseVec sv_scale(const SparseVec& v, const Scalar& c);
SparseVec sv_neg(const SparseVec& v);
/// a + c*b, merged.
SparseVec sv_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);
SparseVec sv_add(const SparseVec& a, const SparseVec& b);
/// Sorts and merges colliding terms, dropping zeros.
SparseVec sv_compress(std::vector<std::pair<uint32_t, Scalar>> terms);

// Column-major exact sparse matrix over a fixed field.  Workhorse shared by
// the tensor-linalg layer and the groupoid chain complex, whose free modules
// are not tensor powers.
class SparseMatrix {
public:
    SparseMatrix(FieldSpec field, uint32_t nrows, uint32_t ncols);
    static SparseMatrix identity(const FieldSpec& field, uint32_t n);

    const FieldSpec& field() const { return field_; }
    uint32_t nrows() const { return nrows_; }
    uint32_t ncols() const { return ncols_; }

    const SparseVec& col(uint32_t j) const { return cols_[j]; }
    void set_col(uint32_t j, SparseVec v);
    void add_entry(uint32_t row, uint32_t col, const Scalar& value);
    void set_entry(uint32_t row, uint32_t col, const Scalar& value);
    Scalar entry(uint32_t row, uint32_t col) const;

    SparseVec apply(const SparseVec& v) const;
    /// this * rhs (apply rhs first).
    SparseMatrix compose(const SparseMatrix& rhs) const;
    SparseMatrix transpose() const;

    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix operator-() const;
    SparseMatrix scaled(const Scalar& c) const;

    bool operator==(const SparseMatrix& o) const;
    bool operator!=(const SparseMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    size_t nnz() const;
    double density() const;
    std::vector<SparseVec> rows() const;

private:
    FieldSpec field_;
    uint32_t nrows_, ncols_;
    std::vector<SparseVec> cols_;
};

// Linearly independent vectors spanning a subspace, stored in reduced row
// echelon form (leftmost pivots, pivot entries 1, sorted by pivot column) so
// that equal subspaces compare equal.
struct SubspaceBasis {
    FieldSpec field;
    uint32_t ambient_dim = 0;
    std::vector<SparseVec> vectors;

    uint32_t dim() const { return static_cast<uint32_t>(vectors.size()); }
    bool operator==(const SubspaceBasis& o) const;
};

struct EchelonForm {
    std::vector<SparseVec> rows;  // reduced, sorted by pivot column
    std::vector<uint32_t> pivots; // pivot column of rows[i]
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
EchelonForm rref(std::vector<SparseVec> rows, uint32_t ncols, const FieldSpec& field);

/// Canonicalizes a spanning set into a SubspaceBasis.
SubspaceBasis row_space(const FieldSpec& field, uint32_t ambient_dim,
                        std::vector<SparseVec> vectors);

SubspaceBasis kernel_basis(const SparseMatrix& m);
SubspaceBasis image_basis(const SparseMatrix& m);
uint32_t rank(const SparseMatrix& m);

bool subspace_contains(const SubspaceBasis& space, const SparseVec& v);

/// dim Z - dim B, after checking B is contained in Z (error NotContained).
uint32_t quotient_dim(const SubspaceBasis& z, const SubspaceBasis& b);

/// One solution of A x = b, if any.
std::optional<SparseVec> solve(const SparseMatrix& a, const SparseVec& b);

/// Exact inverse of a square matrix, or nullopt if singular.
std::optional<SparseMatrix> inverse(const SparseMatrix& a);

/// Exact determinant: fraction-free Bareiss elimination over Q (densified,
/// denominators cleared), plain Gaussian elimination over F_p.
Scalar determinant(const SparseMatrix& a);

} // namespace adjhopf
