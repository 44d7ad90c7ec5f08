#include "glkm/yangian/casimir.hpp"

#include "glkm/linalg/ops.hpp"
#include "glkm/yangian/rtt.hpp"

#include <algorithm>

namespace glkm {

std::vector<Scalar> theta(const RepContext& ctx) {
    std::vector<Scalar> th;
    for (std::size_t x = 1; x <= ctx.n; ++x) th.push_back(ctx.bosonic(x) ? Scalar(1) : Scalar(-1));
    return th;
}

CasimirData tau_series(const GeneratorSet& g, std::size_t order) {
    if (order < 2) throw std::invalid_argument("Casimir series needs order >= 2");
    const MatSeries lax = lax_two_term(g, order);
    const MatSeries t = series_mul(lax, series_inverse(lax.negated_argument()));
    const std::vector<Scalar> th = theta(g.ctx());
    const MatSeries tau = aux_trace(t, g.n(), th);
    return CasimirData{SparseMat::diagonal(th), tau.coeffs()};
}

CheckReport verify_casimir(const GeneratorSet& g, std::size_t order) {
    Stopwatch sw;
    const RepContext& c = g.ctx();
    CheckReport rep("casimir " + c.str() + " K=" + std::to_string(order));
    const CasimirData cd = tau_series(g, order);
    const std::vector<Scalar> th = theta(c);

    for (std::size_t p = 0; p < cd.tau.size(); ++p)
        for (const auto& [name, m] : g.all())
            rep.expect_zero("[tau" + std::to_string(p) + "," + name + "]", commutator(cd.tau[p], *m));

    SparseMat tau1(c.dim(), c.dim()), tau2(c.dim(), c.dim());
    for (std::size_t x = 1; x <= c.n; ++x) {
        tau1 += (Scalar(2) * th[x - 1]) * mat_mul(g.t(x, x), g.h_inv(x));
        for (std::size_t y = 1; y <= c.n; ++y)
            tau2 += (Scalar(2) * th[x - 1]) *
                    mat_mul(mat_mul(mat_mul(g.t(x, y), g.h_inv(y)), g.t(y, x)), g.h_inv(x));
    }
    rep.expect_equal("tau1 closed form", tau1, cd.tau[1]);
    rep.expect_equal("tau2 closed form", tau2, cd.tau[2]);
    if (c.N == 1) rep.expect_equal("tau1 = 2 id on one site", Scalar(2) * SparseMat::identity(c.n), cd.tau[1]);
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

SparseMat aux_transpose(const SparseMat& m, std::size_t aux) {
    const std::size_t rr = m.rows() / aux, rc = m.cols() / aux;
    std::vector<Triplet> t;
    t.reserve(m.nnz());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& e : m.row(i)) {
            const std::size_t a = i / rr, r = i % rr, b = e.col / rc, s = e.col % rc;
            t.push_back({b * rr + r, a * rc + s, e.value});
        }
    return SparseMat::from_triplets(m.rows(), m.cols(), std::move(t));
}

MatSeries antipode_series(const GeneratorSet& g, std::size_t order) {
    if (order < 2) throw std::invalid_argument("antipode series needs order >= 2");
    MatSeries lax = lax_two_term(g, order);
    for (std::size_t p = 0; p <= order; ++p) lax[p] = aux_transpose(lax[p], g.n());
    return series_inverse(lax);
}

SparseMat antipode_entry(const MatSeries& s, std::size_t n, std::size_t p, std::size_t x, std::size_t y) {
    return aux_block(s[p], n, y - 1, x - 1);
}

CheckReport verify_antipode(const GeneratorSet& g, std::size_t order) {
    Stopwatch sw;
    const RepContext& c = g.ctx();
    const std::size_t n = c.n;
    CheckReport rep("antipode " + c.str() + " K=" + std::to_string(order));
    const MatSeries s = antipode_series(g, order);
    const SparseMat zero(c.dim(), c.dim());

    for (std::size_t x = 1; x <= n; ++x)
        for (std::size_t y = 1; y <= n; ++y) {
            const std::string xy = std::to_string(x) + "," + std::to_string(y);
            rep.expect_equal("s(h) block " + xy, x == y ? g.h_inv(x) : zero, antipode_entry(s, n, 0, x, y));
            rep.expect_equal("s(L1_" + xy + ")", -mat_mul(mat_mul(g.h_inv(y), g.t(x, y)), g.h_inv(x)),
                             antipode_entry(s, n, 1, x, y));
            SparseMat second = zero;
            for (std::size_t z = 1; z <= n; ++z)
                second += mat_mul(mat_mul(mat_mul(mat_mul(g.h_inv(y), g.t(z, y)), g.h_inv(z)), g.t(x, z)), g.h_inv(x));
            rep.expect_equal("s(L2_" + xy + ")", second, antipode_entry(s, n, 2, x, y));
        }

    // defining identity: sum_z s(L^{(p1)}_{z,y}) L^{(p2)}_{x,z} over p1+p2 = p is delta_{p,0} delta_{x,y}
    MatSeries lax_t = lax_two_term(g, order);
    for (std::size_t p = 0; p <= order; ++p) lax_t[p] = aux_transpose(lax_t[p], n);
    const MatSeries left = series_mul(s, lax_t), right = series_mul(lax_t, s);
    const MatSeries one = MatSeries::identity(s.dim(), order);
    for (std::size_t p = 0; p <= order; ++p) {
        rep.expect_equal("S M = 1 at order " + std::to_string(p), one[p], left[p]);
        rep.expect_equal("M S = 1 at order " + std::to_string(p), one[p], right[p]);
    }
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

}  // namespace glkm
