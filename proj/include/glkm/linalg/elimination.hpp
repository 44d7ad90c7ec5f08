#pragma once

#include "glkm/linalg/sparse.hpp"

#include <stdexcept>
#include <vector>

namespace glkm {

class SingularError : public std::runtime_error {
public:
    SingularError(std::size_t dim, std::size_t rank);
    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rank_; }
    std::size_t defect() const { return dim_ - rank_; }

private:
    std::size_t dim_;
    std::size_t rank_;
};

std::size_t rank(const SparseMat& a);

// Right nullspace, one vector per free column in ascending column order; the
// free coordinate of each vector is 1 and the other free coordinates are 0.
std::vector<Vector> kernel_basis(const SparseMat& a);

SparseMat inverse(const SparseMat& a);

// Rank of the matrix whose columns are the given vectors.
std::size_t rank_of(const std::vector<Vector>& vectors);

}  // namespace glkm
