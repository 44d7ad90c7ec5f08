#pragma once

#include "glkm/linalg/rep_context.hpp"
#include "glkm/linalg/sparse.hpp"
#include "glkm/report/check_report.hpp"

#include <string>

namespace glkm {

// Alphabet [n] with bosonic letters [k] and fermionic letters {k+1..n};
// alpha is the (integer) deformation strength.
struct BraidParams {
    std::size_t n = 2;
    std::size_t k = 1;
    long alpha = 1;

    std::size_t m() const { return n - k; }
    std::string str() const;
};

SparseMat build_permutation(std::size_t n);
// D = id - 2 alpha sum_{x>k} e_{xx} (x) e_{xx}
SparseMat build_deformation(const BraidParams& p);
// r-check = D P
SparseMat build_rcheck(const BraidParams& p);
// e_x (x) e_y -> e_{y+1} (x) e_{x-1}, letters mod n
SparseMat lyubashenko(std::size_t n);

// Local dimension of an operator on C^n (x) C^n.
std::size_t local_dim(const SparseMat& m);

CheckReport check_braid(const SparseMat& rcheck);
CheckReport check_involutive(const SparseMat& m);

enum class Classification { combinatorial, non_combinatorial, not_basis_preserving };
std::string to_string(Classification c);
// Requires an involutive braid solution; throws PreconditionError otherwise.
Classification classify(const SparseMat& rcheck);

// R(lambda) = lambda (P r-check) + P
SparseMat baxterize(const SparseMat& rcheck, const Scalar& lambda);
CheckReport check_ybe_parametric(const BraidParams& p, const Scalar& l1, const Scalar& l2);
CheckReport check_unitarity(const BraidParams& p, const Scalar& lambda);

// r-check_j = id^{(j-1)} (x) r-check (x) id^{(N-j-1)}
SparseMat braid_generator(const SparseMat& rcheck, std::size_t j, const RepContext& ctx);
SparseMat build_hamiltonian(const RepContext& ctx, long alpha);

}  // namespace glkm
