#include "adjhopf/linmap.hpp"

#include <algorithm>

namespace adjhopf {

uint64_t ipow(uint32_t base, uint32_t exp) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        r *= base;
        if (r >= (1ull << 31)) {
            fail("TooLarge", "tensor power dimension " + std::to_string(base) + "^" +
                                 std::to_string(exp) + " exceeds 2^31");
        }
    }
    return r;
}

LinearMap::LinearMap(FieldSpec field, uint32_t base_dim, uint32_t in_arity, uint32_t out_arity)
    : base_dim_(base_dim),
      in_arity_(in_arity),
      out_arity_(out_arity),
      mat_(field, static_cast<uint32_t>(ipow(base_dim, out_arity)),
           static_cast<uint32_t>(ipow(base_dim, in_arity))) {}

LinearMap LinearMap::zero(const FieldSpec& f, uint32_t d, uint32_t in_arity, uint32_t out_arity) {
    return LinearMap(f, d, in_arity, out_arity);
}

LinearMap LinearMap::identity(const FieldSpec& f, uint32_t d, uint32_t arity) {
    LinearMap m(f, d, arity, arity);
    m.mat_ = SparseMatrix::identity(f, m.in_dim());
    return m;
}

LinearMap LinearMap::factor_permutation(const FieldSpec& f, uint32_t d,
                                        const std::vector<uint32_t>& slots) {
    const uint32_t k = static_cast<uint32_t>(slots.size());
    LinearMap m(f, d, k, k);
    const Scalar one = Scalar::one(f);
    std::vector<uint32_t> t(k);
    for (uint32_t c = 0; c < m.in_dim(); ++c) {
        uint32_t rem = c;
        for (uint32_t i = k; i-- > 0;) {
            t[i] = rem % d;
            rem /= d;
        }
        uint32_t row = 0;
        for (uint32_t i = 0; i < k; ++i) row = row * d + t[slots[i]];
        m.mat_.set_col(c, sv_unit(row, one));
    }
    return m;
}

LinearMap LinearMap::swap(const FieldSpec& f, uint32_t d) {
    return factor_permutation(f, d, {1, 0});
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
    if (base_dim_ != o.base_dim_ || in_arity_ != o.in_arity_ || out_arity_ != o.out_arity_) {
        fail("ArityMismatch", "sum of maps with different shapes");
    }
    LinearMap out = *this;
    out.mat_ = mat_ + o.mat_;
    return out;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
    if (base_dim_ != o.base_dim_ || in_arity_ != o.in_arity_ || out_arity_ != o.out_arity_) {
        fail("ArityMismatch", "difference of maps with different shapes");
    }
    LinearMap out = *this;
    out.mat_ = mat_ - o.mat_;
    return out;
}

LinearMap LinearMap::operator-() const {
    LinearMap out = *this;
    out.mat_ = -mat_;
    return out;
}

LinearMap LinearMap::scaled(const Scalar& c) const {
    LinearMap out = *this;
    out.mat_ = mat_.scaled(c);
    return out;
}

bool LinearMap::operator==(const LinearMap& o) const {
    return base_dim_ == o.base_dim_ && in_arity_ == o.in_arity_ && out_arity_ == o.out_arity_ &&
           mat_ == o.mat_;
}

SparseVec LinearMap::vec() const {
    std::vector<std::pair<uint32_t, Scalar>> terms;
    for (uint32_t j = 0; j < in_dim(); ++j) {
        for (const auto& [i, v] : mat_.col(j)) terms.emplace_back(i * in_dim() + j, v);
    }
    return sv_compress(std::move(terms));
}

LinearMap LinearMap::from_vec(const FieldSpec& f, uint32_t d, uint32_t in_arity,
                              uint32_t out_arity, const SparseVec& coords) {
    LinearMap m(f, d, in_arity, out_arity);
    for (const auto& [idx, v] : coords) {
        m.mat_.set_entry(idx / m.in_dim(), idx % m.in_dim(), v);
    }
    return m;
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
    if (!(g.field() == f.field())) fail("FieldMismatch", "composing maps over different fields");
    if (g.base_dim() != f.base_dim() || g.in_arity() != f.out_arity()) {
        fail("ArityMismatch", "compose: inner arities " + std::to_string(f.out_arity()) + " vs " +
                                  std::to_string(g.in_arity()));
    }
    LinearMap out(g.field(), g.base_dim(), f.in_arity(), g.out_arity());
    out.matrix() = g.matrix().compose(f.matrix());
    return out;
}

LinearMap compose_chain(const std::vector<LinearMap>& maps) {
    LinearMap out = maps.back();
    for (size_t i = maps.size() - 1; i-- > 0;) out = compose(maps[i], out);
    return out;
}

LinearMap tensor(const LinearMap& f, const LinearMap& g) {
    if (!(f.field() == g.field())) fail("FieldMismatch", "tensor of maps over different fields");
    if (f.base_dim() != g.base_dim()) {
        fail("ArityMismatch", "tensor: base dimensions differ");
    }
    LinearMap out(f.field(), f.base_dim(), f.in_arity() + g.in_arity(),
                  f.out_arity() + g.out_arity());
    const uint32_t gin = g.in_dim(), gout = g.out_dim();
    for (uint32_t cf = 0; cf < f.in_dim(); ++cf) {
        const SparseVec& colf = f.matrix().col(cf);
        if (colf.empty()) continue;
        for (uint32_t cg = 0; cg < gin; ++cg) {
            const SparseVec& colg = g.matrix().col(cg);
            if (colg.empty()) continue;
            SparseVec col;
            col.reserve(colf.size() * colg.size());
            for (const auto& [rf, vf] : colf) {
                for (const auto& [rg, vg] : colg) {
                    col.emplace_back(rf * gout + rg, vf * vg);
                }
            }
            out.matrix().set_col(cf * gin + cg, std::move(col));
        }
    }
    return out;
}

LinearMap tensor_all(const std::vector<LinearMap>& maps) {
    LinearMap out = maps.front();
    for (size_t i = 1; i < maps.size(); ++i) out = tensor(out, maps[i]);
    return out;
}

SubspaceBasis kernel_basis(const LinearMap& f) { return kernel_basis(f.matrix()); }
SubspaceBasis image_basis(const LinearMap& f) { return image_basis(f.matrix()); }
uint32_t rank(const LinearMap& f) { return rank(f.matrix()); }

namespace {

void require_square(const LinearMap& f, const char* what) {
    if (f.in_arity() != f.out_arity()) {
        fail("NotSquare", std::string(what) + " of a non-square map (arities " +
                              std::to_string(f.in_arity()) + " -> " +
                              std::to_string(f.out_arity()) + ")");
    }
}

} // namespace

Poly char_poly(const LinearMap& f) {
    require_square(f, "characteristic polynomial");
    const uint32_t n = f.in_dim();
    const FieldSpec fs = f.field();
    const Scalar zero = Scalar::zero(fs), one = Scalar::one(fs);
    if (n == 0) return {one};

    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n, zero));
    for (uint32_t j = 0; j < n; ++j) {
        for (const auto& [i, v] : f.matrix().col(j)) a[i][j] = v;
    }

    // Berkowitz: combine the char poly of each trailing principal submatrix
    // with the Toeplitz column built from R * M^j * C.
    std::vector<Scalar> v = {one, -a[n - 1][n - 1]}; // descending coefficients
    for (uint32_t k = n - 1; k-- > 0;) {
        const uint32_t m = n - k;
        std::vector<Scalar> q(m + 1, zero);
        q[0] = one;
        q[1] = -a[k][k];
        std::vector<Scalar> w(m - 1, zero);
        for (uint32_t i = 0; i < m - 1; ++i) w[i] = a[k + 1 + i][k];
        for (uint32_t j = 1; j < m; ++j) {
            Scalar s = zero;
            for (uint32_t i = 0; i < m - 1; ++i) s += a[k][k + 1 + i] * w[i];
            q[j + 1] = -s;
            if (j + 1 < m) {
                std::vector<Scalar> nw(m - 1, zero);
                for (uint32_t r = 0; r < m - 1; ++r) {
                    Scalar acc = zero;
                    for (uint32_t c = 0; c < m - 1; ++c) acc += a[k + 1 + r][k + 1 + c] * w[c];
                    nw[r] = acc;
                }
                w = std::move(nw);
            }
        }
        std::vector<Scalar> nv(m + 1, zero);
        for (uint32_t i = 0; i <= m; ++i) {
            Scalar acc = zero;
            for (uint32_t j = 0; j < std::min<uint32_t>(i + 1, m); ++j) acc += q[i - j] * v[j];
            nv[i] = acc;
        }
        v = std::move(nv);
    }
    std::reverse(v.begin(), v.end());
    return poly_trim(v);
}

Poly min_poly(const LinearMap& f) {
    require_square(f, "minimal polynomial");
    const uint32_t n = f.in_dim();
    const FieldSpec fs = f.field();
    const Scalar one = Scalar::one(fs);
    const Scalar zero = Scalar::zero(fs);
    if (n == 0) return {one};

    Poly mp = {one};
    for (uint32_t e = 0; e < n && poly_deg(mp) < static_cast<int>(n); ++e) {
        // Echelonized Krylov vectors of this seed, each paired with its
        // expression in powers of f; the j-th row's expression has degree j,
        // so the first dependency is the local minimal polynomial.
        std::vector<SparseVec> rows;
        std::vector<Poly> exprs;
        std::vector<uint32_t> pivots;

        SparseVec v = sv_unit(e, one);
        Poly expr = {one};
        for (;;) {
            for (size_t r = 0; r < rows.size(); ++r) {
                Scalar c = sv_get(v, pivots[r], fs);
                if (c.is_zero()) continue;
                v = sv_axpy(v, -c, rows[r]);
                if (exprs[r].size() > expr.size()) expr.resize(exprs[r].size(), zero);
                for (size_t t = 0; t < exprs[r].size(); ++t) expr[t] -= c * exprs[r][t];
            }
            if (v.empty()) {
                mp = poly_lcm(mp, poly_trim(expr));
                break;
            }
            const Scalar lead_inv = v.front().second.inverse();
            pivots.push_back(v.front().first);
            rows.push_back(sv_scale(v, lead_inv));
            Poly scaled = expr;
            for (auto& c : scaled) c *= lead_inv;
            exprs.push_back(std::move(scaled));

            v = f.apply(rows.back());
            expr.assign(exprs.back().size() + 1, zero);
            for (size_t t = 0; t < exprs.back().size(); ++t) expr[t + 1] = exprs.back()[t];
        }
    }
    return mp;
}

Scalar det(const LinearMap& f) {
    require_square(f, "determinant");
    return determinant(f.matrix());
}

} // namespace adjhopf
