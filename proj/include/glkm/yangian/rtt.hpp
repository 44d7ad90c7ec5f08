#pragma once

#include "glkm/linalg/series.hpp"
#include "glkm/report/check_report.hpp"
#include "glkm/yangian/generators.hpp"

namespace glkm {

// T(lambda) = R_{0,N}(lambda) ... R_{0,1}(lambda) on C^n (aux, leg 0) (x) the N sites.
SparseMat monodromy(const RepContext& ctx, const Scalar& lambda, long alpha = 1);
// R12(l1-l2) T1(l1) T2(l2) = T2(l2) T1(l1) R12(l1-l2) on two auxiliary spaces and the sites.
CheckReport check_rtt_monodromy(const RepContext& ctx, const Scalar& l1, const Scalar& l2, long alpha = 1);

// L(lambda) = sum e_{xx} (x) h_x + u sum e_{xy} (x) t_{xy}, u = 1/lambda, aux factor first.
MatSeries lax_two_term(const GeneratorSet& g, std::size_t order = 1);
SparseMat lax_at(const GeneratorSet& g, const Scalar& lambda);
CheckReport check_rtt_lax(const GeneratorSet& g, const Scalar& l1, const Scalar& l2);

}  // namespace glkm
