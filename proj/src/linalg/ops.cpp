#include "glkm/linalg/ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace glkm {

SparseMat mat_mul(const SparseMat& a, const SparseMat& b) {
    if (kernels::parallel_available() && kernels::max_threads() > 1 && a.rows() >= kernels::parallel_row_threshold)
        return kernels::mat_mul_parallel(a, b);
    return kernels::mat_mul_serial(a, b);
}

SparseMat kron(const SparseMat& a, const SparseMat& b) {
    if (kernels::parallel_available() && kernels::max_threads() > 1 &&
        a.rows() * b.rows() >= kernels::parallel_row_threshold)
        return kernels::kron_parallel(a, b);
    return kernels::kron_serial(a, b);
}

SparseMat kron_all(const std::vector<SparseMat>& factors) {
    if (factors.empty()) return SparseMat::identity(1);
    SparseMat out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
    return out;
}

SparseMat power(const SparseMat& a, unsigned exponent) {
    if (!a.is_square()) throw DimensionError("power of non-square " + a.shape_str());
    SparseMat out = SparseMat::identity(a.rows());
    for (unsigned i = 0; i < exponent; ++i) out = mat_mul(out, a);
    return out;
}

SparseMat commutator(const SparseMat& a, const SparseMat& b) { return mat_mul(a, b) - mat_mul(b, a); }

SparseMat anticommutator(const SparseMat& a, const SparseMat& b) { return mat_mul(a, b) + mat_mul(b, a); }

SparseMat embed_at_site(const SparseMat& a, std::size_t site, std::size_t local, std::size_t sites) {
    if (!a.is_square()) throw DimensionError("embedded operator must be square, got " + a.shape_str());
    std::size_t span = 0;
    for (std::size_t d = 1; d < a.rows(); d *= local) ++span;
    std::size_t check = 1;
    for (std::size_t s = 0; s < span; ++s) check *= local;
    if (check != a.rows()) throw DimensionError("operator dimension is not a power of " + std::to_string(local));
    if (a.rows() == 1) span = 0;
    if (site < 1 || site + span - 1 > sites || (span == 0 && site > sites))
        throw std::out_of_range("site " + std::to_string(site) + " with span " + std::to_string(span) +
                                " outside " + std::to_string(sites) + " sites");
    std::size_t left = 1, right = 1;
    for (std::size_t s = 1; s < site; ++s) left *= local;
    for (std::size_t s = site + span; s <= sites; ++s) right *= local;
    return kron(kron(SparseMat::identity(left), a), SparseMat::identity(right));
}

SparseMat embed_legs(const SparseMat& a, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& legs) {
    std::size_t total = 1;
    std::vector<std::size_t> stride(dims.size());
    for (std::size_t l = dims.size(); l-- > 0;) {
        stride[l] = total;
        total *= dims[l];
    }
    std::size_t sub = 1;
    for (std::size_t leg : legs) {
        if (leg >= dims.size()) throw std::out_of_range("leg " + std::to_string(leg) + " outside the tensor");
        sub *= dims[leg];
    }
    if (a.rows() != sub || a.cols() != sub)
        throw DimensionError("operator " + a.shape_str() + " does not match legs of total dimension " +
                             std::to_string(sub));

    std::vector<std::vector<Entry>> rows(total);
    std::vector<std::size_t> digit(legs.size());
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t s = 0;
        for (std::size_t t = 0; t < legs.size(); ++t) {
            digit[t] = (i / stride[legs[t]]) % dims[legs[t]];
            s = s * dims[legs[t]] + digit[t];
        }
        std::size_t base = i;
        for (std::size_t t = 0; t < legs.size(); ++t) base -= digit[t] * stride[legs[t]];
        auto& out = rows[i];
        out.reserve(a.row(s).size());
        for (const auto& e : a.row(s)) {
            std::size_t rest = e.col, col = base;
            for (std::size_t t = legs.size(); t-- > 0;) {
                col += (rest % dims[legs[t]]) * stride[legs[t]];
                rest /= dims[legs[t]];
            }
            out.push_back({col, e.value});
        }
        std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
    }
    return SparseMat::from_rows(total, std::move(rows));
}

SparseMat swap_factors(std::size_t d1, std::size_t d2) {
    std::vector<Triplet> t;
    t.reserve(d1 * d2);
    for (std::size_t x = 0; x < d1; ++x)
        for (std::size_t y = 0; y < d2; ++y) t.push_back({y * d1 + x, x * d2 + y, Scalar(1)});
    return SparseMat::from_triplets(d1 * d2, d1 * d2, std::move(t));
}

}  // namespace glkm
