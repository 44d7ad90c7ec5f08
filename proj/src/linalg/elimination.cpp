#include "glkm/linalg/elimination.hpp"

#include <algorithm>
#include <string>

namespace glkm {

SingularError::SingularError(std::size_t dim, std::size_t rank)
    : std::runtime_error("singular matrix: dimension " + std::to_string(dim) + ", rank " + std::to_string(rank) +
                         ", defect " + std::to_string(dim - rank)),
      dim_(dim),
      rank_(rank) {}

namespace {

using Dense = std::vector<std::vector<Scalar>>;

// Scale every row by the lcm of its denominators so all entries lie in Z[i].
Dense integral_rows(const SparseMat& a) {
    Dense d = a.to_dense();
    for (auto& row : d) {
        mpz_class l = 1;
        for (const auto& s : row)
            if (!s.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), common_denominator(s).get_mpz_t());
        if (l != 1) {
            const Scalar f{mpq_class(l)};
            for (auto& s : row) s *= f;
        }
    }
    return d;
}

struct Echelon {
    Dense m;
    std::vector<std::size_t> pivot_cols;
};

// Bareiss fraction-free row echelon form. Each division by the previous pivot
// is exact in Z[i], so entries stay Gaussian integers throughout.
Echelon bareiss(Dense m, std::size_t ncols) {
    const std::size_t nrows = m.size();
    std::vector<std::size_t> pivots;
    Scalar prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && m[p][c].is_zero()) ++p;
        if (p == nrows) continue;
        if (p != r) std::swap(m[p], m[r]);
        const Scalar piv = m[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            const Scalar lead = m[i][c];
            for (std::size_t j = c; j < ncols; ++j) {
                if (lead.is_zero() && m[i][j].is_zero()) continue;
                Scalar v = piv * m[i][j];
                if (!lead.is_zero() && !m[r][j].is_zero()) v -= lead * m[r][j];
                m[i][j] = prev.is_one() ? std::move(v) : v / prev;
            }
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

std::size_t rank(const SparseMat& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    // eliminate along the shorter side
    if (a.rows() > a.cols()) return rank(a.transpose());
    return bareiss(integral_rows(a), a.cols()).pivot_cols.size();
}

std::vector<Vector> kernel_basis(const SparseMat& a) {
    const std::size_t n = a.cols();
    Echelon e = bareiss(integral_rows(a), n);
    std::vector<char> is_pivot(n, 0);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = 1;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> x(n);
        x[f] = 1;
        for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
            const std::size_t pc = e.pivot_cols[r];
            Scalar sum;
            for (std::size_t j = pc + 1; j < n; ++j)
                if (!x[j].is_zero() && !e.m[r][j].is_zero()) sum += e.m[r][j] * x[j];
            x[pc] = -sum / e.m[r][pc];
        }
        basis.push_back(Vector::from_dense(x));
    }
    return basis;
}

SparseMat inverse(const SparseMat& a) {
    if (!a.is_square()) throw DimensionError("inverse of non-square " + a.shape_str());
    const std::size_t n = a.rows();
    // sparse Gauss-Jordan on [A | I]; pivots prefer the sparsest candidate row
    std::vector<std::vector<Entry>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].assign(a.row(i).begin(), a.row(i).end());
        rows[i].push_back({n + i, Scalar(1)});
    }
    auto value_at = [](const std::vector<Entry>& r, std::size_t c) -> const Scalar* {
        auto it = std::lower_bound(r.begin(), r.end(), c, [](const Entry& e, std::size_t k) { return e.col < k; });
        return (it != r.end() && it->col == c) ? &it->value : nullptr;
    };
    auto axpy = [](const std::vector<Entry>& x, const Scalar& s, const std::vector<Entry>& y) {
        // x - s*y
        std::vector<Entry> out;
        out.reserve(x.size() + y.size());
        std::size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && x[i].col < y[j].col)) {
                out.push_back(x[i++]);
            } else if (i == x.size() || y[j].col < x[i].col) {
                out.push_back({y[j].col, -(s * y[j].value)});
                ++j;
            } else {
                Scalar v = x[i].value - s * y[j].value;
                if (!v.is_zero()) out.push_back({x[i].col, std::move(v)});
                ++i;
                ++j;
            }
        }
        return out;
    };

    std::vector<char> used(n, 0);
    std::vector<std::size_t> pivot_row(n);
    std::size_t found = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!used[i] && value_at(rows[i], c) && (best == n || rows[i].size() < rows[best].size())) best = i;
        if (best == n) continue;
        used[best] = 1;
        pivot_row[c] = best;
        ++found;
        const Scalar piv = *value_at(rows[best], c);
        if (!piv.is_one())
            for (auto& e : rows[best]) e.value /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == best) continue;
            const Scalar* v = value_at(rows[i], c);
            if (v) rows[i] = axpy(rows[i], Scalar(*v), rows[best]);
        }
    }
    if (found < n) throw SingularError(n, rank(a));

    std::vector<std::vector<Entry>> out(n);
    for (std::size_t c = 0; c < n; ++c) {
        for (const auto& e : rows[pivot_row[c]])
            if (e.col >= n) out[c].push_back({e.col - n, e.value});
    }
    return SparseMat::from_rows(n, std::move(out));
}

std::size_t rank_of(const std::vector<Vector>& vectors) {
    if (vectors.empty()) return 0;
    return rank(columns_matrix(vectors));
}

}  // namespace glkm
