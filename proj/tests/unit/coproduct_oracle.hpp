#pragma once

// Iterated coproduct images written directly from the closed form
// t_{x,y} = sum_j h_y^{(j-1)} (x) e_{y,x} (x) h_x^{(N-j)}, entry by entry.

#include "glkm/linalg/rep_context.hpp"
#include "glkm/linalg/sparse.hpp"
#include "glkm/yangian/generators.hpp"

#include <vector>

namespace oracle {

// h_z acts on letter a by -1 iff z is fermionic and a == z.
inline long h_sign(std::size_t z, std::size_t letter, std::size_t k) { return (z > k && letter == z) ? -1 : 1; }

// The opposite leg order swaps the roles of h_x and h_y.
inline glkm::SparseMat closed_form_t(std::size_t x, std::size_t y, const glkm::RepContext& ctx,
                                     glkm::LegOrder order = glkm::LegOrder::standard) {
    const std::size_t before = order == glkm::LegOrder::standard ? y : x;
    const std::size_t after = order == glkm::LegOrder::standard ? x : y;
    std::vector<glkm::Triplet> t;
    for (std::size_t col = 0; col < ctx.dim(); ++col) {
        const auto b = ctx.decode(col);
        for (std::size_t j = 0; j < ctx.N; ++j) {
            if (b[j] != x) continue;
            long sign = 1;
            for (std::size_t i = 0; i < j; ++i) sign *= h_sign(before, b[i], ctx.k);
            for (std::size_t i = j + 1; i < ctx.N; ++i) sign *= h_sign(after, b[i], ctx.k);
            auto a = b;
            a[j] = y;
            t.push_back({ctx.encode(a), col, glkm::Scalar(sign)});
        }
    }
    return glkm::SparseMat::from_triplets(ctx.dim(), ctx.dim(), std::move(t));
}

inline glkm::SparseMat closed_form_h(std::size_t z, const glkm::RepContext& ctx) {
    std::vector<glkm::Scalar> diag;
    for (std::size_t i = 0; i < ctx.dim(); ++i) {
        long s = 1;
        for (std::size_t letter : ctx.decode(i)) s *= h_sign(z, letter, ctx.k);
        diag.push_back(s);
    }
    return glkm::SparseMat::diagonal(diag);
}

}  // namespace oracle
