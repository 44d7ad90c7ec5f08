#include "glkm/yangian/rtt.hpp"

#include "glkm/braid/braid.hpp"
#include "glkm/linalg/ops.hpp"

namespace glkm {

SparseMat monodromy(const RepContext& ctx, const Scalar& lambda, long alpha) {
    const SparseMat r = baxterize(build_rcheck({ctx.n, ctx.k, alpha}), lambda);
    const std::vector<std::size_t> dims(ctx.N + 1, ctx.n);
    SparseMat t = SparseMat::identity(ctx.dim() * ctx.n);
    for (std::size_t j = 1; j <= ctx.N; ++j) t = mat_mul(embed_legs(r, dims, {0, j}), t);
    return t;
}

namespace {

// Legs: 0 = aux1, 1 = aux2, 2.. = sites. `op` acts on aux (x) sites.
SparseMat on_aux(const SparseMat& op, std::size_t aux_leg, std::size_t n, std::size_t sites) {
    std::vector<std::size_t> dims(sites + 2, n);
    std::vector<std::size_t> legs{aux_leg};
    for (std::size_t s = 0; s < sites; ++s) legs.push_back(2 + s);
    return embed_legs(op, dims, legs);
}

CheckReport rtt_core(const std::string& name, const SparseMat& t1raw, const SparseMat& t2raw, std::size_t n,
                     std::size_t sites, const SparseMat& r) {
    CheckReport rep(name);
    const SparseMat t1 = on_aux(t1raw, 0, n, sites);
    const SparseMat t2 = on_aux(t2raw, 1, n, sites);
    std::vector<std::size_t> dims(sites + 2, n);
    const SparseMat r12 = embed_legs(r, dims, {0, 1});
    rep.expect_equal("R12 T1 T2 vs T2 T1 R12", mat_mul(mat_mul(t2, t1), r12), mat_mul(mat_mul(r12, t1), t2));
    return rep;
}

}  // namespace

CheckReport check_rtt_monodromy(const RepContext& ctx, const Scalar& l1, const Scalar& l2, long alpha) {
    Stopwatch sw;
    const SparseMat r = baxterize(build_rcheck({ctx.n, ctx.k, alpha}), l1 - l2);
    CheckReport rep = rtt_core("rtt/monodromy " + ctx.str() + " lambda=(" + l1.str() + "," + l2.str() + ")",
                               monodromy(ctx, l1, alpha), monodromy(ctx, l2, alpha), ctx.n, ctx.N, r);
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

MatSeries lax_two_term(const GeneratorSet& g, std::size_t order) {
    const std::size_t n = g.n();
    const std::size_t dim = n * g.ctx().dim();
    MatSeries s(dim, order < 1 ? 1 : order);
    for (std::size_t x = 1; x <= n; ++x) {
        s[0] += kron(SparseMat::unit(n, x, x), g.h(x));
        for (std::size_t y = 1; y <= n; ++y)
            if (!g.t(x, y).is_zero()) s[1] += kron(SparseMat::unit(n, x, y), g.t(x, y));
    }
    return s;
}

SparseMat lax_at(const GeneratorSet& g, const Scalar& lambda) {
    const MatSeries s = lax_two_term(g);
    return s[0] + (Scalar(1) / lambda) * s[1];
}

CheckReport check_rtt_lax(const GeneratorSet& g, const Scalar& l1, const Scalar& l2) {
    Stopwatch sw;
    const RepContext& c = g.ctx();
    // the Lax matrix is normalized with lambda^{-1}; in that normalization the
    // intertwiner is R(delta) = delta D + P as for the monodromy
    const SparseMat r = baxterize(build_rcheck({c.n, c.k, 1}), l1 - l2);
    CheckReport rep = rtt_core("rtt/lax " + c.str() + " lambda=(" + l1.str() + "," + l2.str() + ")", lax_at(g, l1),
                               lax_at(g, l2), c.n, c.N, r);
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

}  // namespace glkm
