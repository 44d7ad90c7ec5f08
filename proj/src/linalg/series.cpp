#include "glkm/linalg/series.hpp"

#include "glkm/linalg/elimination.hpp"
#include "glkm/linalg/ops.hpp"

#include <stdexcept>

namespace glkm {

MatSeries::MatSeries(std::size_t dim, std::size_t order) : dim_(dim), coeffs_(order + 1, SparseMat(dim, dim)) {}

MatSeries::MatSeries(std::vector<SparseMat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
    dim_ = coeffs_[0].rows();
    for (const auto& c : coeffs_)
        if (c.rows() != dim_ || c.cols() != dim_)
            throw DimensionError("series coefficient " + c.shape_str() + " in a series of dimension " +
                                 std::to_string(dim_));
}

MatSeries MatSeries::identity(std::size_t dim, std::size_t order) {
    MatSeries s(dim, order);
    s.coeffs_[0] = SparseMat::identity(dim);
    return s;
}

MatSeries MatSeries::negated_argument() const {
    MatSeries out = *this;
    for (std::size_t p = 1; p < coeffs_.size(); p += 2) out.coeffs_[p] = -coeffs_[p];
    return out;
}

MatSeries MatSeries::transpose() const {
    MatSeries out = *this;
    for (auto& c : out.coeffs_) c = c.transpose();
    return out;
}

bool operator==(const MatSeries& a, const MatSeries& b) { return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_; }

MatSeries series_mul(const MatSeries& a, const MatSeries& b) {
    if (a.dim() != b.dim()) throw DimensionError("series of different dimensions");
    const std::size_t k = std::min(a.order(), b.order());
    MatSeries out(a.dim(), k);
    for (std::size_t p = 0; p <= k; ++p)
        for (std::size_t q = 0; p + q <= k; ++q)
            if (!a[p].is_zero() && !b[q].is_zero()) out[p + q] += mat_mul(a[p], b[q]);
    return out;
}

// T_0 = S_0^{-1}; T_p = -S_0^{-1} sum_{q=1..p} S_q T_{p-q}.
MatSeries series_inverse(const MatSeries& s) {
    const SparseMat inv0 = inverse(s[0]);
    MatSeries t(s.dim(), s.order());
    t[0] = inv0;
    for (std::size_t p = 1; p <= s.order(); ++p) {
        SparseMat acc(s.dim(), s.dim());
        for (std::size_t q = 1; q <= p; ++q)
            if (!s[q].is_zero() && !t[p - q].is_zero()) acc += mat_mul(s[q], t[p - q]);
        t[p] = -mat_mul(inv0, acc);
    }
    return t;
}

SparseMat aux_block(const SparseMat& m, std::size_t aux, std::size_t a, std::size_t b) {
    if (m.rows() % aux != 0 || m.cols() % aux != 0)
        throw DimensionError("matrix " + m.shape_str() + " has no auxiliary factor of dimension " + std::to_string(aux));
    const std::size_t rr = m.rows() / aux, rc = m.cols() / aux;
    std::vector<std::vector<Entry>> rows(rr);
    for (std::size_t i = 0; i < rr; ++i)
        for (const auto& e : m.row(a * rr + i))
            if (e.col >= b * rc && e.col < (b + 1) * rc) rows[i].push_back({e.col - b * rc, e.value});
    return SparseMat::from_rows(rc, std::move(rows));
}

MatSeries aux_trace(const MatSeries& s, std::size_t aux, const std::vector<Scalar>& weights) {
    if (weights.size() != aux) throw DimensionError("trace weights do not match the auxiliary dimension");
    std::vector<SparseMat> out;
    for (const auto& c : s.coeffs()) {
        SparseMat acc(c.rows() / aux, c.cols() / aux);
        for (std::size_t x = 0; x < aux; ++x) acc += weights[x] * aux_block(c, aux, x, x);
        out.push_back(std::move(acc));
    }
    return MatSeries(std::move(out));
}

}  // namespace glkm
