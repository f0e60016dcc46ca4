#include "adjhopf/sparse.hpp"

#include <algorithm>
#include <map>

namespace adjhopf {

SparseVec sv_unit(uint32_t index, const Scalar& value) {
    if (value.is_zero()) return {};
    return {{index, value}};
}

Scalar sv_get(const SparseVec& v, uint32_t index, const FieldSpec& field) {
    auto it = std::lower_bound(v.begin(), v.end(), index,
                               [](const auto& e, uint32_t i) { return e.first < i; });
    if (it != v.end() && it->first == index) return it->second;
    return Scalar::zero(field);
}

bool sv_is_zero(const SparseVec& v) { return v.empty(); }

SparseVec sv_scale(const SparseVec& v, const Scalar& c) {
    if (c.is_zero()) return {};
    SparseVec out;
    out.reserve(v.size());
    for (const auto& [i, x] : v) {
        Scalar y = x * c;
        if (!y.is_zero()) out.emplace_back(i, y);
    }
    return out;
}

SparseVec sv_neg(const SparseVec& v) {
    SparseVec out;
    out.reserve(v.size());
    for (const auto& [i, x] : v) out.emplace_back(i, -x);
    return out;
}

SparseVec sv_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
    if (c.is_zero()) return a;
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Scalar y = c * b[j].second;
            if (!y.is_zero()) out.emplace_back(b[j].first, y);
            ++j;
        } else {
            Scalar y = a[i].second + c * b[j].second;
            if (!y.is_zero()) out.emplace_back(a[i].first, y);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sv_add(const SparseVec& a, const SparseVec& b) {
    if (b.empty()) return a;
    if (a.empty()) return b;
    return sv_axpy(a, Scalar::one(b.front().second.field()), b);
}

SparseVec sv_compress(std::vector<std::pair<uint32_t, Scalar>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVec out;
    for (auto& [i, v] : terms) {
        if (!out.empty() && out.back().first == i) {
            out.back().second += v;
        } else {
            out.emplace_back(i, v);
        }
    }
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    return out;
}

SparseMatrix::SparseMatrix(FieldSpec field, uint32_t nrows, uint32_t ncols)
    : field_(field), nrows_(nrows), ncols_(ncols), cols_(ncols) {}

SparseMatrix SparseMatrix::identity(const FieldSpec& field, uint32_t n) {
    SparseMatrix m(field, n, n);
    for (uint32_t i = 0; i < n; ++i) m.cols_[i] = sv_unit(i, Scalar::one(field));
    return m;
}

void SparseMatrix::set_col(uint32_t j, SparseVec v) { cols_[j] = std::move(v); }

void SparseMatrix::add_entry(uint32_t row, uint32_t col, const Scalar& value) {
    if (value.is_zero()) return;
    auto& c = cols_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const auto& e, uint32_t r) { return e.first < r; });
    if (it != c.end() && it->first == row) {
        it->second += value;
        if (it->second.is_zero()) c.erase(it);
    } else {
        c.insert(it, {row, value});
    }
}

void SparseMatrix::set_entry(uint32_t row, uint32_t col, const Scalar& value) {
    auto& c = cols_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const auto& e, uint32_t r) { return e.first < r; });
    if (it != c.end() && it->first == row) {
        if (value.is_zero()) {
            c.erase(it);
        } else {
            it->second = value;
        }
    } else if (!value.is_zero()) {
        c.insert(it, {row, value});
    }
}

Scalar SparseMatrix::entry(uint32_t row, uint32_t col) const {
    return sv_get(cols_[col], row, field_);
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [j, c] : v) out = sv_axpy(out, c, cols_[j]);
    return out;
}

SparseMatrix SparseMatrix::compose(const SparseMatrix& rhs) const {
    SparseMatrix out(field_, nrows_, rhs.ncols_);
    for (uint32_t j = 0; j < rhs.ncols_; ++j) out.cols_[j] = apply(rhs.cols_[j]);
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix out(field_, ncols_, nrows_);
    std::vector<std::vector<std::pair<uint32_t, Scalar>>> buckets(nrows_);
    for (uint32_t j = 0; j < ncols_; ++j) {
        for (const auto& [i, v] : cols_[j]) buckets[i].emplace_back(j, v);
    }
    for (uint32_t i = 0; i < nrows_; ++i) out.cols_[i] = std::move(buckets[i]);
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    SparseMatrix out(field_, nrows_, ncols_);
    for (uint32_t j = 0; j < ncols_; ++j) out.cols_[j] = sv_add(cols_[j], o.cols_[j]);
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    SparseMatrix out(field_, nrows_, ncols_);
    const Scalar minus_one = -Scalar::one(field_);
    for (uint32_t j = 0; j < ncols_; ++j) out.cols_[j] = sv_axpy(cols_[j], minus_one, o.cols_[j]);
    return out;
}

SparseMatrix SparseMatrix::operator-() const { return scaled(-Scalar::one(field_)); }

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
    SparseMatrix out(field_, nrows_, ncols_);
    for (uint32_t j = 0; j < ncols_; ++j) out.cols_[j] = sv_scale(cols_[j], c);
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return field_ == o.field_ && nrows_ == o.nrows_ && ncols_ == o.ncols_ && cols_ == o.cols_;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const SparseVec& c) { return c.empty(); });
}

size_t SparseMatrix::nnz() const {
    size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

double SparseMatrix::density() const {
    const double cells = double(nrows_) * double(ncols_);
    return cells == 0 ? 0.0 : double(nnz()) / cells;
}

std::vector<SparseVec> SparseMatrix::rows() const {
    std::vector<SparseVec> out(nrows_);
    for (uint32_t j = 0; j < ncols_; ++j) {
        for (const auto& [i, v] : cols_[j]) out[i].emplace_back(j, v);
    }
    return out; // per-row entries already sorted by column
}

bool SubspaceBasis::operator==(const SubspaceBasis& o) const {
    return field == o.field && ambient_dim == o.ambient_dim && vectors == o.vectors;
}

namespace {

// Eliminates all pivot columns of `reduced` from v.  Reduced rows carry their
// pivot as leftmost entry and are zero on every other pivot column, so one
// left-to-right pass suffices.
SparseVec reduce_against(SparseVec v, const std::vector<SparseVec>& reduced,
                         const std::map<uint32_t, size_t>& pivot_row) {
    size_t i = 0;
    while (i < v.size()) {
        auto it = pivot_row.find(v[i].first);
        if (it == pivot_row.end()) {
            ++i;
            continue;
        }
        v = sv_axpy(v, -v[i].second, reduced[it->second]);
        // the entry at position i cancelled; re-examine the same position
    }
    return v;
}

} // namespace

EchelonForm rref(std::vector<SparseVec> rows, uint32_t ncols, const FieldSpec& field) {
    (void)ncols;
    std::vector<SparseVec> reduced;
    std::map<uint32_t, size_t> pivot_row;
    for (auto& raw : rows) {
        SparseVec r = reduce_against(std::move(raw), reduced, pivot_row);
        if (r.empty()) continue;
        const uint32_t pivot = r.front().first;
        r = sv_scale(r, r.front().second.inverse());
        for (auto& prev : reduced) {
            Scalar c = sv_get(prev, pivot, field);
            if (!c.is_zero()) prev = sv_axpy(prev, -c, r);
        }
        reduced.push_back(std::move(r));
        pivot_row[pivot] = reduced.size() - 1;
    }
    EchelonForm out;
    out.rows.reserve(reduced.size());
    for (const auto& [pivot, idx] : pivot_row) {
        out.pivots.push_back(pivot);
        out.rows.push_back(reduced[idx]);
    }
    return out;
}

SubspaceBasis row_space(const FieldSpec& field, uint32_t ambient_dim,
                        std::vector<SparseVec> vectors) {
    EchelonForm e = rref(std::move(vectors), ambient_dim, field);
    return SubspaceBasis{field, ambient_dim, std::move(e.rows)};
}

SubspaceBasis kernel_basis(const SparseMatrix& m) {
    EchelonForm e = rref(m.rows(), m.ncols(), m.field());
    std::vector<bool> is_pivot(m.ncols(), false);
    for (uint32_t p : e.pivots) is_pivot[p] = true;

    std::vector<SparseVec> gens;
    for (uint32_t f = 0; f < m.ncols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::pair<uint32_t, Scalar>> terms;
        terms.emplace_back(f, Scalar::one(m.field()));
        for (size_t r = 0; r < e.rows.size(); ++r) {
            Scalar c = sv_get(e.rows[r], f, m.field());
            if (!c.is_zero()) terms.emplace_back(e.pivots[r], -c);
        }
        gens.push_back(sv_compress(std::move(terms)));
    }
    return row_space(m.field(), m.ncols(), std::move(gens));
}

SubspaceBasis image_basis(const SparseMatrix& m) {
    std::vector<SparseVec> cols;
    cols.reserve(m.ncols());
    for (uint32_t j = 0; j < m.ncols(); ++j) cols.push_back(m.col(j));
    return row_space(m.field(), m.nrows(), std::move(cols));
}

uint32_t rank(const SparseMatrix& m) {
    return static_cast<uint32_t>(rref(m.rows(), m.ncols(), m.field()).rows.size());
}

bool subspace_contains(const SubspaceBasis& space, const SparseVec& v) {
    std::map<uint32_t, size_t> pivot_row;
    for (size_t r = 0; r < space.vectors.size(); ++r) {
        if (!space.vectors[r].empty()) pivot_row[space.vectors[r].front().first] = r;
    }
    return reduce_against(v, space.vectors, pivot_row).empty();
}

uint32_t quotient_dim(const SubspaceBasis& z, const SubspaceBasis& b) {
    for (const auto& v : b.vectors) {
        if (!subspace_contains(z, v)) {
            fail("NotContained", "coboundary vector outside the cocycle space");
        }
    }
    return z.dim() - b.dim();
}

std::optional<SparseVec> solve(const SparseMatrix& a, const SparseVec& b) {
    // Row-reduce [A | b]; inconsistent iff a pivot lands in the last column.
    std::vector<SparseVec> rows = a.rows();
    for (const auto& [i, v] : b) rows[i].emplace_back(a.ncols(), v);
    EchelonForm e = rref(std::move(rows), a.ncols() + 1, a.field());
    SparseVec x;
    for (size_t r = 0; r < e.rows.size(); ++r) {
        if (e.pivots[r] == a.ncols()) return std::nullopt;
        Scalar c = sv_get(e.rows[r], a.ncols(), a.field());
        if (!c.is_zero()) x.emplace_back(e.pivots[r], c);
    }
    return x;
}

std::optional<SparseMatrix> inverse(const SparseMatrix& a) {
    const uint32_t n = a.nrows();
    if (n != a.ncols()) fail("NotSquare", "inverse of a non-square matrix");
    std::vector<SparseVec> rows = a.rows();
    for (uint32_t i = 0; i < n; ++i) rows[i].emplace_back(n + i, Scalar::one(a.field()));
    EchelonForm e = rref(std::move(rows), 2 * n, a.field());
    if (e.rows.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    SparseMatrix inv(a.field(), n, n);
    for (uint32_t r = 0; r < n; ++r) {
        for (const auto& [j, v] : e.rows[r]) {
            if (j >= n) inv.add_entry(r, j - n, v);
        }
    }
    return inv;
}

namespace {

Scalar determinant_fp(const SparseMatrix& a) {
    const uint32_t n = a.nrows();
    std::vector<SparseVec> rows = a.rows();
    Scalar det = Scalar::one(a.field());
    for (uint32_t k = 0; k < n; ++k) {
        uint32_t pick = n;
        for (uint32_t r = k; r < n; ++r) {
            if (!rows[r].empty() && rows[r].front().first == k) {
                pick = r;
                break;
            }
        }
        if (pick == n) return Scalar::zero(a.field());
        if (pick != k) {
            std::swap(rows[pick], rows[k]);
            det = -det;
        }
        const Scalar pivot = rows[k].front().second;
        det *= pivot;
        const Scalar pinv = pivot.inverse();
        for (uint32_t r = k + 1; r < n; ++r) {
            if (!rows[r].empty() && rows[r].front().first == k) {
                rows[r] = sv_axpy(rows[r], -(rows[r].front().second * pinv), rows[k]);
            }
        }
    }
    return det;
}

} // namespace

Scalar determinant(const SparseMatrix& a) {
    const uint32_t n = a.nrows();
    if (n != a.ncols()) fail("NotSquare", "determinant of a non-square matrix");
    if (n == 0) return Scalar::one(a.field());
    if (a.field().is_prime_field()) return determinant_fp(a);

    // Clear denominators row by row, then run one-step fraction-free Bareiss.
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
    mpq_class denom(1);
    {
        std::vector<SparseVec> rows = a.rows();
        for (uint32_t i = 0; i < n; ++i) {
            mpz_class l(1);
            for (const auto& [j, v] : rows[i]) l = lcm(l, v.rational_value().get_den());
            denom *= l;
            for (const auto& [j, v] : rows[i]) {
                mpq_class scaled = v.rational_value() * l;
                m[i][j] = scaled.get_num();
            }
        }
    }
    int sign = 1;
    mpz_class prev(1);
    for (uint32_t k = 0; k + 1 < n; ++k) {
        uint32_t pick = n;
        for (uint32_t r = k; r < n; ++r) {
            if (m[r][k] != 0) {
                pick = r;
                break;
            }
        }
        if (pick == n) return Scalar::zero(a.field());
        if (pick != k) {
            std::swap(m[pick], m[k]);
            sign = -sign;
        }
        for (uint32_t i = k + 1; i < n; ++i) {
            for (uint32_t j = k + 1; j < n; ++j) {
                mpz_class t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    mpq_class result(m[n - 1][n - 1] * sign);
    result /= denom;
    result.canonicalize();
    return Scalar::rational(result);
}

} // namespace adjhopf
