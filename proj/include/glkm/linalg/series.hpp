#pragma once

#include "glkm/linalg/sparse.hpp"

#include <cstddef>
#include <vector>

namespace glkm {

// Truncated power series sum_{p<=K} u^p C_p in u = 1/lambda with square
// coefficient matrices of a common dimension.
class MatSeries {
public:
    MatSeries() = default;
    MatSeries(std::size_t dim, std::size_t order);
    explicit MatSeries(std::vector<SparseMat> coeffs);

    static MatSeries identity(std::size_t dim, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    std::size_t dim() const { return dim_; }
    const SparseMat& operator[](std::size_t p) const { return coeffs_.at(p); }
    SparseMat& operator[](std::size_t p) { return coeffs_.at(p); }
    const std::vector<SparseMat>& coeffs() const { return coeffs_; }

    // lambda -> -lambda, i.e. C_p -> (-1)^p C_p
    MatSeries negated_argument() const;
    MatSeries transpose() const;

    friend bool operator==(const MatSeries& a, const MatSeries& b);

private:
    std::size_t dim_ = 0;
    std::vector<SparseMat> coeffs_;
};

MatSeries series_mul(const MatSeries& a, const MatSeries& b);
MatSeries series_inverse(const MatSeries& s);

// Partial trace over a leading auxiliary factor of dimension `aux` weighted by
// diag(weights): sum_x w_x (e_{x,x} (x) 1) C_p restricted to block (x,x).
MatSeries aux_trace(const MatSeries& s, std::size_t aux, const std::vector<Scalar>& weights);
// Block (a, b) (0-based) of a matrix on C^aux (x) C^rest.
SparseMat aux_block(const SparseMat& m, std::size_t aux, std::size_t a, std::size_t b);

}  // namespace glkm
