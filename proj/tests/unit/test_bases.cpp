#include "coproduct_oracle.hpp"
#include "support.hpp"

#include "glkm/bases/bases.hpp"
#include "glkm/braid/braid.hpp"
#include "glkm/linalg/ops.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

using namespace glkm;

namespace {

MultiIndex plus(std::vector<long> m) { return {Family::plus, std::move(m)}; }
MultiIndex minus(std::vector<long> m) { return {Family::minus, std::move(m)}; }

Vector basis(const RepContext& ctx, std::vector<std::size_t> letters) {
    return Vector::basis(ctx.dim(), ctx.encode(letters));
}

// Products of closed-form coproduct images applied to e_1^N or e_n^N.
Vector u_oracle(const RepContext& ctx, const MultiIndex& idx) {
    const std::size_t n = ctx.n;
    const bool p = idx.sign == Family::plus;
    Vector v = basis(ctx, std::vector<std::size_t>(ctx.N, p ? 1 : n));
    if (p) {
        for (std::size_t y = 2; y <= n; ++y)
            for (long r = 0; r < idx.m[y - 1]; ++r) v = apply(oracle::closed_form_t(1, y, ctx), v);
    } else {
        for (std::size_t y = 1; y < n; ++y)
            for (long r = 0; r < idx.m[y - 1]; ++r) v = apply(oracle::closed_form_t(n, y, ctx), v);
    }
    return v;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("admissible indices", "[bases]") {
    const RepContext c(2, 1, 3);
    CHECK(admissible(c, plus({3, 0})));
    CHECK(admissible(c, plus({2, 1})));
    CHECK_FALSE(admissible(c, plus({1, 2})));
    CHECK_FALSE(admissible(c, plus({2, 0})));
    CHECK(admissible(c, minus({0, 3})));
    CHECK(admissible(c, minus({1, 2})));
    CHECK_FALSE(admissible(c, minus({2, 1})));

    CHECK(enumerate_admissible(c, Family::plus) == std::vector<MultiIndex>{plus({3, 0}), plus({2, 1})});
    CHECK(enumerate_admissible(c, Family::minus) == std::vector<MultiIndex>{minus({0, 3}), minus({1, 2})});
    const RepContext c3(3, 1, 3);
    CHECK(enumerate_admissible(c3, Family::plus) ==
          std::vector<MultiIndex>{plus({3, 0, 0}), plus({2, 1, 0}), plus({2, 0, 1}), plus({1, 1, 1})});
    CHECK(enumerate_admissible(c3, Family::minus).size() == 7);
}

TEST_CASE("u vectors match the closed-form products", "[bases]") {
    const RepContext c(2, 1, 3);
    const GeneratorSet g(c);
    CHECK(build_u_vector(g, plus({2, 1})).vec == basis(c, {1, 1, 2}) + basis(c, {1, 2, 1}) + basis(c, {2, 1, 1}));
    const RepContext c2(2, 1, 2);
    CHECK(build_u_vector(GeneratorSet(c2), minus({1, 1})).vec == basis(c2, {2, 1}) - basis(c2, {1, 2}));
    const RepContext c3(3, 1, 3);
    CHECK(build_u_vector(GeneratorSet(c3), minus({0, 2, 1})).vec ==
          Scalar(2) * (basis(c3, {2, 2, 3}) - basis(c3, {2, 3, 2}) + basis(c3, {3, 2, 2})));

    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t k = 1; k < n; ++k)
            for (std::size_t N = 1; N <= 4; ++N) {
                const RepContext ctx(n, k, N);
                const GeneratorSet gs(ctx);
                for (Family f : {Family::plus, Family::minus})
                    for (const auto& idx : enumerate_admissible(ctx, f)) {
                        const Vector v = build_u_vector(gs, idx).vec;
                        CHECK(v == u_oracle(ctx, idx));
                        CHECK_FALSE(v.is_zero());
                    }
            }
}

TEST_CASE("highest vectors and Hamiltonian eigenvectors", "[bases]") {
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t k = 1; k < n; ++k)
            for (std::size_t N = 1; N <= 4; ++N) {
                const RepContext ctx(n, k, N);
                const GeneratorSet g(ctx);
                CHECK(highest_vector(g, Family::plus).vec == basis(ctx, std::vector<std::size_t>(N, 1)));
                CHECK(highest_vector(g, Family::minus).vec == basis(ctx, std::vector<std::size_t>(N, n)));
                CHECK(check_highest_vector(g, Family::plus).passed);
                CHECK(check_highest_vector(g, Family::minus).passed);
                if (N < 2) continue;
                CHECK(check_hamiltonian_eigen(g).passed);
                const SparseMat H = build_hamiltonian(ctx, 1);
                const Scalar e(static_cast<long>(N - 1));
                for (Family f : {Family::plus, Family::minus})
                    for (const auto& idx : enumerate_admissible(ctx, f)) {
                        const Vector v = u_oracle(ctx, idx);
                        CHECK(apply(H, v) == (f == Family::plus ? e : -e) * v);
                    }
                const Vector top = basis(ctx, std::vector<std::size_t>(N, 1));
                CHECK(apply(H, top) == Scalar(static_cast<long>(N - 1)) * top);
            }
}

TEST_CASE("generator action on the basis", "[bases]") {
    const RepContext c(2, 1, 3);
    const GeneratorSet g(c);
    const Vector u30 = build_u_vector(g, plus({3, 0})).vec;
    const Vector u21 = build_u_vector(g, plus({2, 1})).vec;
    CHECK(apply(g.h(2), u21) == -u21);
    CHECK(apply(g.h(1), u21) == u21);
    CHECK(apply(g.e(1), u30) == u21);
    CHECK(apply(g.f(1), u21) == Scalar(3) * u30);
    CHECK(apply(g.e(1), u21).is_zero());

    const ShiftPrediction pe = predict_e(c, plus({3, 0}), 1);
    CHECK_FALSE(pe.zero);
    CHECK(pe.coefficient == Scalar(1));
    CHECK(pe.target == plus({2, 1}));
    const ShiftPrediction pf = predict_f(c, plus({2, 1}), 1);
    CHECK_FALSE(pf.zero);
    CHECK(pf.coefficient == Scalar(3));
    CHECK(pf.target == plus({3, 0}));
    CHECK(predict_e(c, plus({2, 1}), 1).zero);

    // every prediction, zero or not, against the vectors built from the closed form
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t k = 1; k < n; ++k)
            for (std::size_t N = 1; N <= 4; ++N) {
                const RepContext ctx(n, k, N);
                const GeneratorSet gs(ctx);
                for (Family f : {Family::plus, Family::minus})
                    for (const auto& idx : enumerate_admissible(ctx, f)) {
                        const Vector v = u_oracle(ctx, idx);
                        for (std::size_t x = 1; x < n; ++x) {
                            for (bool raise : {true, false}) {
                                const ShiftPrediction pr = raise ? predict_e(ctx, idx, x) : predict_f(ctx, idx, x);
                                const Vector got = apply(raise ? gs.e(x) : gs.f(x), v);
                                const Vector want =
                                    pr.zero ? Vector(ctx.dim()) : pr.coefficient * u_oracle(ctx, pr.target);
                                INFO(ctx.str() << " " << idx.str() << (raise ? " e" : " f") << x);
                                CHECK(got == want);
                            }
                        }
                    }
                CHECK(check_action_all(gs).passed);
            }
}

TEST_CASE("family independence", "[bases]") {
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t k = 1; k < n; ++k)
            for (std::size_t N = 1; N <= 4; ++N) {
                const RepContext ctx(n, k, N);
                const GeneratorSet g(ctx);
                CHECK(check_family_independence(g).passed);
                for (Family f : {Family::plus, Family::minus}) {
                    std::vector<Vector> vs;
                    for (const auto& idx : enumerate_admissible(ctx, f)) vs.push_back(u_oracle(ctx, idx));
                    CHECK(oracle::rank(oracle::dense(columns_matrix(vs))) == vs.size());
                }
            }
}

TEST_CASE("two-site spectral decomposition", "[bases]") {
    for (auto [n, k, np, nm] : {std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>{2, 1, 2, 2},
                                {3, 2, 5, 4},
                                {3, 1, 4, 5},
                                {4, 2, 8, 8}}) {
        const SpectralN2 s = spectral_decomposition_n2(n, k);
        CHECK(s.report.passed);
        CHECK(s.plus.size() == np);
        CHECK(s.minus.size() == nm);
        const SparseMat rc = build_rcheck({n, k, 1});
        std::vector<Vector> all;
        for (const auto& p : s.plus) {
            CHECK(apply(rc, p.vec) == p.vec);
            all.push_back(p.vec);
        }
        for (const auto& p : s.minus) {
            CHECK(apply(rc, p.vec) == -p.vec);
            all.push_back(p.vec);
        }
        CHECK(oracle::rank(oracle::dense(columns_matrix(all))) == n * n);
    }
    const SpectralN2 s = spectral_decomposition_n2(2, 1);
    REQUIRE(s.minus.size() == 2);
    CHECK(s.minus[0].label(Family::minus) == "u-_(1,2)");
}

TEST_CASE("action graphs match the reference diagrams", "[bases][dot]") {
    for (auto [n, k, tag] : {std::tuple<std::size_t, std::size_t, std::string>{2, 1, "gl_1_1"}, {3, 2, "gl_2_1"}}) {
        for (Family f : {Family::plus, Family::minus}) {
            const std::string name = tag + (f == Family::plus ? "_plus" : "_minus") + ".dot";
            const std::string dot = action_graph_dot(n, k, f);
            CHECK(dot == slurp(std::string(GLKM_GOLDEN_DIR) + "/" + name));
            CHECK(dot == action_graph_dot(n, k, f));
        }
    }
}
