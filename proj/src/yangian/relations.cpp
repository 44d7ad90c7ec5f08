#include "glkm/yangian/relations.hpp"

#include "glkm/braid/braid.hpp"
#include "glkm/linalg/ops.hpp"

namespace glkm {

namespace {

std::string idx(std::size_t a) { return std::to_string(a); }
std::string idx(std::size_t a, std::size_t b) { return std::to_string(a) + "," + std::to_string(b); }

}  // namespace

CheckReport verify_gl_relations(const GeneratorSet& g) {
    Stopwatch sw;
    CheckReport rep("relations/quadratic " + g.ctx().str());
    const std::size_t n = g.n();
    const RepContext& c = g.ctx();
    const std::size_t dim = c.dim();
    const SparseMat zero(dim, dim);
    auto delta = [](std::size_t a, std::size_t b) { return a == b; };

    for (std::size_t x = c.k + 1; x <= n; ++x)
        for (std::size_t y = c.k + 1; y <= n; ++y)
            rep.expect_zero("[h" + idx(x) + ",h" + idx(y) + "]", commutator(g.h(x), g.h(y)));

    for (std::size_t x = 1; x <= n; ++x)
        for (std::size_t y = 1; y <= n; ++y)
            for (std::size_t z = c.k + 1; z <= n; ++z) {
                SparseMat rhs = zero;
                if (delta(z, x)) rhs += Scalar(2) * mat_mul(g.t(x, y), g.h(x));
                if (delta(y, z)) rhs -= Scalar(2) * mat_mul(g.h(y), g.t(x, y));
                rep.expect_equal("[L" + idx(x, y) + ",h" + idx(z) + "]", rhs, commutator(g.t(x, y), g.h(z)));
            }

    for (std::size_t x = 1; x <= n; ++x)
        for (std::size_t y = 1; y <= n; ++y)
            for (std::size_t z = 1; z <= n; ++z)
                for (std::size_t w = 1; w <= n; ++w) {
                    SparseMat lhs = commutator(g.t(x, y), g.t(z, w));
                    if (x == z && c.fermionic(x)) lhs -= Scalar(2) * mat_mul(g.t(x, y), g.t(x, w));
                    if (y == w && c.fermionic(y)) lhs += Scalar(2) * mat_mul(g.t(z, y), g.t(x, y));
                    SparseMat rhs = zero;
                    if (x == w) rhs += mat_mul(g.t(z, y), g.h(x));
                    if (y == z) rhs -= mat_mul(g.h(y), g.t(x, w));
                    rep.expect_equal("exchange L" + idx(x, y) + " L" + idx(z, w), rhs, lhs);
                }

    for (std::size_t x = 1; x <= n; ++x)
        for (std::size_t y = 1; y <= n; ++y)
            if (c.bosonic(x) != c.bosonic(y))
                rep.expect_zero("L" + idx(x, y) + "^2", mat_mul(g.t(x, y), g.t(x, y)));

    for (std::size_t x = 1; x <= n; ++x)
        for (std::size_t y = 1; y <= n; ++y)
            for (std::size_t z = 1; z <= n; ++z) {
                const bool up = x < y && y < z, down = x > y && y > z;
                if (!up && !down) continue;
                rep.expect_equal("[L" + idx(x, y) + ",L" + idx(y, z) + "]", -mat_mul(g.h(y), g.t(x, z)),
                                 commutator(g.t(x, y), g.t(y, z)));
            }
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

CheckReport verify_serre(const GeneratorSet& g) {
    Stopwatch sw;
    CheckReport rep("relations/serre " + g.ctx().str());
    const RepContext& c = g.ctx();
    const std::size_t n = g.n(), k = c.k;
    if (n < 2) return CheckReport::not_applicable(rep.name, "needs n >= 2");

    for (std::size_t x = k + 1; x <= n; ++x)
        for (std::size_t y = k + 1; y <= n; ++y) rep.expect_zero("[h" + idx(x) + ",h" + idx(y) + "]", commutator(g.h(x), g.h(y)));
    for (std::size_t z = 1; z <= n; ++z)
        for (std::size_t x = 1; x <= n; ++x)
            rep.expect_zero("[eps" + idx(z) + ",h" + idx(x) + "]", commutator(g.eps(z), g.h(x)));

    for (std::size_t x = 1; x < n; ++x) {
        const std::string sx = idx(x);
        for (std::size_t z = 1; z <= n; ++z) {
            if (z == x || z == x + 1) continue;
            rep.expect_zero("[e" + sx + ",h" + idx(z) + "]", commutator(g.e(x), g.h(z)));
            rep.expect_zero("[f" + sx + ",h" + idx(z) + "]", commutator(g.f(x), g.h(z)));
        }
        if (c.fermionic(x) && c.fermionic(x + 1)) {
            rep.expect_zero("{e" + sx + ",h" + sx + "}", anticommutator(g.e(x), g.h(x)));
            rep.expect_zero("{e" + sx + ",h" + idx(x + 1) + "}", anticommutator(g.e(x), g.h(x + 1)));
            rep.expect_zero("{f" + sx + ",h" + sx + "}", anticommutator(g.f(x), g.h(x)));
            rep.expect_zero("{f" + sx + ",h" + idx(x + 1) + "}", anticommutator(g.f(x), g.h(x + 1)));
        }
        for (std::size_t y = 1; y <= n; ++y) {
            if (y == x || y == x + 1) continue;
            rep.expect_zero("[eps" + idx(y) + ",e" + sx + "]", commutator(g.eps(y), g.e(x)));
            rep.expect_zero("[eps" + idx(y) + ",f" + sx + "]", commutator(g.eps(y), g.f(x)));
        }
        if (c.bosonic(x)) {
            rep.expect_equal("[eps" + sx + ",e" + sx + "]", -g.e(x), commutator(g.eps(x), g.e(x)));
            rep.expect_equal("[eps" + sx + ",f" + sx + "]", g.f(x), commutator(g.eps(x), g.f(x)));
        } else {
            rep.expect_equal("{eps" + sx + ",e" + sx + "}", mat_mul(g.h(x), g.e(x)), anticommutator(g.eps(x), g.e(x)));
            rep.expect_equal("{eps" + sx + ",f" + sx + "}", -mat_mul(g.h(x), g.f(x)), anticommutator(g.eps(x), g.f(x)));
        }
        const std::string sx1 = idx(x + 1);
        if (c.bosonic(x + 1)) {
            rep.expect_equal("[eps" + sx1 + ",e" + sx + "]", g.e(x), commutator(g.eps(x + 1), g.e(x)));
            rep.expect_equal("[eps" + sx1 + ",f" + sx + "]", -g.f(x), commutator(g.eps(x + 1), g.f(x)));
        } else {
            rep.expect_equal("{eps" + sx1 + ",e" + sx + "}", -mat_mul(g.h(x + 1), g.e(x)),
                             anticommutator(g.eps(x + 1), g.e(x)));
            rep.expect_equal("{eps" + sx1 + ",f" + sx + "}", mat_mul(g.h(x + 1), g.f(x)),
                             anticommutator(g.eps(x + 1), g.f(x)));
        }
        rep.expect_equal("[f" + sx + ",e" + sx + "]",
                         mat_mul(g.eps(x), g.h(x + 1)) - mat_mul(g.eps(x + 1), g.h(x)), commutator(g.f(x), g.e(x)));

        for (std::size_t y = 1; y < n; ++y) {
            if (y == x) continue;
            // f_x and e_y share a fermionic letter exactly in these two cases
            const bool anti = (y == x + 1 && c.fermionic(x + 1)) || (y + 1 == x && c.fermionic(x));
            if (anti)
                rep.expect_zero("{f" + sx + ",e" + idx(y) + "}", anticommutator(g.f(x), g.e(y)));
            else
                rep.expect_zero("[f" + sx + ",e" + idx(y) + "]", commutator(g.f(x), g.e(y)));
        }
    }

    if (k >= 1 && k < n) {
        rep.expect_zero("e" + idx(k) + "^2", mat_mul(g.e(k), g.e(k)));
        rep.expect_zero("f" + idx(k) + "^2", mat_mul(g.f(k), g.f(k)));
    }

    for (int which = 0; which < 2; ++which) {
        auto xi = [&](std::size_t x) -> const SparseMat& { return which == 0 ? g.e(x) : g.f(x); };
        const std::string tag = which == 0 ? "e" : "f";
        for (std::size_t x = 1; x < n; ++x) {
            if (x == k) continue;
            const SparseMat sq = mat_mul(xi(x), xi(x));
            for (std::size_t y : {x - 1, x + 1}) {
                if (y < 1 || y >= n) continue;
                SparseMat r = mat_mul(xi(y), sq) + mat_mul(sq, xi(y)) - Scalar(2) * mat_mul(mat_mul(xi(x), xi(y)), xi(x));
                rep.expect_zero("cubic " + tag + idx(y) + " " + tag + idx(x) + "^2", r);
            }
        }
        if (k >= 2 && k + 1 <= n - 1) {
            rep.expect_zero("quartic " + tag, anticommutator(commutator(xi(k + 1), xi(k)), commutator(xi(k), xi(k - 1))));
        } else if (which == 0) {
            rep.note("quartic relation not applicable: needs 2 <= k <= n-2");
        }
    }
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

CheckReport verify_hatted(const GeneratorSet& g) {
    Stopwatch sw;
    CheckReport rep("relations/hatted " + g.ctx().str());
    const RepContext& c = g.ctx();
    const std::size_t n = g.n(), k = c.k;
    const SparseMat id = SparseMat::identity(c.dim());
    CheckReport pre("hatted precondition");
    for (std::size_t x = 1; x <= n; ++x) pre.expect_equal("h" + idx(x) + "^2", id, mat_mul(g.h(x), g.h(x)));
    if (!pre.passed) throw PreconditionError("hatted relations need h_x^2 = 1", pre);
    if (n < 2) return CheckReport::not_applicable(rep.name, "needs n >= 2");

    std::vector<SparseMat> e(n), f(n), eps(n + 1);
    for (std::size_t x = 1; x < n; ++x) {
        e[x] = g.hat_e(x);
        f[x] = g.hat_f(x);
    }
    for (std::size_t x = 1; x <= n; ++x) eps[x] = g.hat_eps(x);

    for (std::size_t x = 1; x < n; ++x) {
        const std::string sx = idx(x), sx1 = idx(x + 1);
        if (c.fermionic(x) && c.fermionic(x + 1)) {
            rep.expect_zero("{e^" + sx + ",h" + sx + "}", anticommutator(e[x], g.h(x)));
            rep.expect_zero("{e^" + sx + ",h" + sx1 + "}", anticommutator(e[x], g.h(x + 1)));
            rep.expect_zero("{f^" + sx + ",h" + sx + "}", anticommutator(f[x], g.h(x)));
            rep.expect_zero("{f^" + sx + ",h" + sx1 + "}", anticommutator(f[x], g.h(x + 1)));
        }
        rep.expect_equal("[eps^" + sx + ",e^" + sx + "]", -e[x], commutator(eps[x], e[x]));
        rep.expect_equal("[eps^" + sx + ",f^" + sx + "]", f[x], commutator(eps[x], f[x]));
        rep.expect_equal("[eps^" + sx1 + ",e^" + sx + "]", e[x], commutator(eps[x + 1], e[x]));
        rep.expect_equal("[eps^" + sx1 + ",f^" + sx + "]", -f[x], commutator(eps[x + 1], f[x]));
        if (x != k)
            rep.expect_equal("[f^" + sx + ",e^" + sx + "]", eps[x] - eps[x + 1], commutator(f[x], e[x]));
        else
            rep.expect_equal("{f^" + sx + ",e^" + sx + "}", eps[x] + eps[x + 1], anticommutator(f[x], e[x]));
        if (x + 1 < n && c.fermionic(x + 1))
            rep.expect_zero("{f^" + sx + ",e^" + sx1 + "}", anticommutator(f[x], e[x + 1]));
        if (x > 1 && c.fermionic(x)) rep.expect_zero("{f^" + sx + ",e^" + idx(x - 1) + "}", anticommutator(f[x], e[x - 1]));
    }
    if (k >= 1 && k < n) {
        rep.expect_zero("e^" + idx(k) + "^2", mat_mul(e[k], e[k]));
        rep.expect_zero("f^" + idx(k) + "^2", mat_mul(f[k], f[k]));
    }
    for (int which = 0; which < 2; ++which) {
        const auto& xi = which == 0 ? e : f;
        const std::string tag = which == 0 ? "e^" : "f^";
        for (std::size_t x = 1; x < n; ++x) {
            if (x == k) continue;
            const Scalar cx = c.bosonic(x) ? Scalar(1) : Scalar(-1);
            const SparseMat sq = mat_mul(xi[x], xi[x]);
            for (std::size_t y : {x - 1, x + 1}) {
                if (y < 1 || y >= n) continue;
                SparseMat r = mat_mul(xi[y], sq) + mat_mul(sq, xi[y]) -
                              (Scalar(2) * cx) * mat_mul(mat_mul(xi[x], xi[y]), xi[x]);
                rep.expect_zero("cubic " + tag + idx(y) + " " + tag + idx(x) + "^2", r);
            }
        }
    }

    // coproduct form of e^ and f^ against the products of coproduct images
    for (std::size_t x = 1; x < n; ++x) {
        rep.expect_equal("coproduct form e^" + idx(x), e[x],
                         hatted_coproduct_form(GenSymbol::hat_e(x), c, g.order()));
        rep.expect_equal("coproduct form f^" + idx(x), f[x],
                         hatted_coproduct_form(GenSymbol::hat_f(x), c, g.order()));
    }
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

CheckReport verify_centralizer(const GeneratorSet& g, long braid_alpha) {
    Stopwatch sw;
    const RepContext& c = g.ctx();
    CheckReport rep("relations/centralizer " + c.str() + " alpha=" + std::to_string(braid_alpha));
    if (c.N < 2) return CheckReport::not_applicable(rep.name, "needs at least two sites");
    const SparseMat rc = build_rcheck({c.n, c.k, braid_alpha});
    SparseMat ham(c.dim(), c.dim());
    std::vector<SparseMat> gens;
    for (std::size_t j = 1; j < c.N; ++j) {
        gens.push_back(braid_generator(rc, j, c));
        ham += gens.back();
    }
    for (const auto& [name, m] : g.all()) {
        for (std::size_t j = 1; j < c.N; ++j)
            rep.expect_zero("[r" + idx(j) + "," + name + "]", commutator(gens[j - 1], *m));
        rep.expect_zero("[H," + name + "]", commutator(ham, *m));
    }
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

}  // namespace glkm
