#pragma once

#include "glkm/linalg/sparse.hpp"
#include "glkm/report/check_report.hpp"
#include "glkm/yangian/generators.hpp"

#include <string>
#include <vector>

namespace glkm::gl11 {

// sum_j r-check_j against the XX chain written with Pauli matrices and the boundary field.
CheckReport xx_hamiltonian_check(std::size_t sites);
SparseMat xx_pauli_hamiltonian(std::size_t sites);

struct HWParams {
    Scalar lambda1, lambda2, xi;
};

// Two-dimensional module on {u, w = e u} with highest weight (lambda1, lambda2, xi).
struct TwoDimModule {
    SparseMat eps1, eps2, h, e, f;
    bool degenerate = false;  // lambda1 xi - lambda2 = 0, so f = 0 and span{w} is a submodule
};

TwoDimModule hw_module(const HWParams& p);
// The defining relations of gl_{1,1} evaluated on five 2x2 matrices.
CheckReport check_gl11_relations(const SparseMat& eps1, const SparseMat& eps2, const SparseMat& h, const SparseMat& e,
                                 const SparseMat& f, const std::string& name);
CheckReport check_hw_module(const HWParams& p);

// Coproduct images for gl_{1,1} on `sites` sites.
struct ChainOps {
    std::size_t sites;
    SparseMat e, f, h, eps1, eps2;
};
ChainOps chain_ops(std::size_t sites, LegOrder order = LegOrder::standard);

// Tensor basis vectors with N-p factors e_1 and p factors e_2, ascending index.
std::vector<Vector> weight_space(std::size_t sites, std::size_t p);

// Basis of ker(f) on the weight-p subspace; each vector is scaled to a
// primitive integer vector with positive leading coordinate.
std::vector<Vector> highest_weight_kernel(std::size_t sites, std::size_t p);

CheckReport verify_kernel_module(std::size_t sites, std::size_t p, const Vector& varpi);
CheckReport verify_orthogonality(std::size_t sites, std::size_t p);
// e^T = h f on the chain.
CheckReport verify_adjoint_identity(std::size_t sites);

struct TensorDecomposition {
    CheckReport report;
    Vector a_low, a_high;  // varpi^{(N,p)}_p, varpi^{(N,p)}_{p+1}
    Vector b_low, b_high;  // varpi^{(N,p+1)}_{p+1}, varpi^{(N,p+1)}_{p+2}
};
TensorDecomposition tensor_decompose(std::size_t n1, std::size_t p1, std::size_t n2, std::size_t p2,
                                     const Vector& varpi1, const Vector& varpi2);

// Young tableau as rows of entries.
using Tableau = std::vector<std::vector<std::size_t>>;

// Rows and columns weakly increasing; letters <= k never repeat in a column,
// letters > k never repeat in a row.
bool valid_ssyt(const Tableau& t, std::size_t k);
std::vector<Tableau> enumerate_ssyt(std::size_t n, std::size_t k, const std::vector<std::size_t>& shape);
std::vector<std::size_t> hook_shape(std::size_t sites, std::size_t p);
std::string render(const Tableau& t);

struct SsytPairing {
    CheckReport report;
    Tableau low;   // paired with varpi_p
    Tableau high;  // paired with varpi_{p+1}
};
SsytPairing ssyt_bijection(std::size_t sites, std::size_t p);

}  // namespace glkm::gl11
