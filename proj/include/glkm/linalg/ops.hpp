#pragma once

#include "glkm/linalg/sparse.hpp"

#include <cstddef>
#include <vector>

namespace glkm {

// Products dispatch to the OpenMP kernels when they are compiled in and the
// operand is large enough to amortize the fork; otherwise to the serial ones.
SparseMat mat_mul(const SparseMat& a, const SparseMat& b);
SparseMat kron(const SparseMat& a, const SparseMat& b);
SparseMat kron_all(const std::vector<SparseMat>& factors);
SparseMat power(const SparseMat& a, unsigned exponent);

inline SparseMat operator*(const SparseMat& a, const SparseMat& b) { return mat_mul(a, b); }

SparseMat commutator(const SparseMat& a, const SparseMat& b);
SparseMat anticommutator(const SparseMat& a, const SparseMat& b);

// id^{(site-1)} (x) A (x) id^{(sites-site-j+1)} where A acts on j adjacent
// factors of dimension `local`; site 1 is the leftmost factor.
SparseMat embed_at_site(const SparseMat& a, std::size_t site, std::size_t local, std::size_t sites);

// A acting on the tensor factors listed in `legs` (0-based, in the order A
// sees them) of a space with factor dimensions `dims`; identity elsewhere.
SparseMat embed_legs(const SparseMat& a, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& legs);

// Swap of two tensor factors of dimensions (d1, d2): u (x) w -> w (x) u.
SparseMat swap_factors(std::size_t d1, std::size_t d2);

namespace kernels {

SparseMat mat_mul_serial(const SparseMat& a, const SparseMat& b);
SparseMat kron_serial(const SparseMat& a, const SparseMat& b);
// Row-parallel versions; results are identical to the serial reference.
SparseMat mat_mul_parallel(const SparseMat& a, const SparseMat& b);
SparseMat kron_parallel(const SparseMat& a, const SparseMat& b);

bool parallel_available();
int max_threads();
// Rows below which dispatch stays serial.
inline constexpr std::size_t parallel_row_threshold = 256;

}  // namespace kernels

}  // namespace glkm
