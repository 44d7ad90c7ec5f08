#pragma once

#include "glkm/linalg/series.hpp"
#include "glkm/report/check_report.hpp"
#include "glkm/yangian/generators.hpp"

namespace glkm {

struct CasimirData {
    SparseMat d;                  // diag(theta), theta = +1 bosonic, -1 fermionic
    std::vector<SparseMat> tau;   // tau^{(0..K)} on the N sites
};

std::vector<Scalar> theta(const RepContext& ctx);

// t(lambda) = L(lambda) L^{-1}(-lambda), tau = tr_aux(d t) to order K.
CasimirData tau_series(const GeneratorSet& g, std::size_t order);
// Centrality of every tau^{(p)}, the closed forms of tau^{(1)} and tau^{(2)},
// and tau^{(1)} = 2 on one site.
CheckReport verify_casimir(const GeneratorSet& g, std::size_t order);

// Block transpose in the auxiliary factor: M_{a,b} = L_{b,a}.
SparseMat aux_transpose(const SparseMat& m, std::size_t aux);

// Inverse of the aux-transposed Lax series; s(L^{(p)}_{x,y}) is block (y,x) of
// coefficient p, and s(h_x) = block (x,x) of coefficient 0.
MatSeries antipode_series(const GeneratorSet& g, std::size_t order);
SparseMat antipode_entry(const MatSeries& s, std::size_t n, std::size_t p, std::size_t x, std::size_t y);
CheckReport verify_antipode(const GeneratorSet& g, std::size_t order);

}  // namespace glkm
