#include "support.hpp"

#include "glkm/braid/braid.hpp"
#include "glkm/linalg/ops.hpp"
#include "glkm/linalg/rep_context.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace glkm;

namespace {

// r-check from its action on basis vectors: e_x (x) e_y -> e_y (x) e_x, except
// e_x (x) e_x -> (1 - 2 alpha) e_x (x) e_x for fermionic x.
oracle::Dense rcheck_oracle(std::size_t n, std::size_t k, long alpha) {
    oracle::Dense d = oracle::zeros(n * n, n * n);
    for (std::size_t x = 1; x <= n; ++x)
        for (std::size_t y = 1; y <= n; ++y) {
            const std::size_t col = (x - 1) * n + (y - 1), row = (y - 1) * n + (x - 1);
            d[row][col] = (x == y && x > k) ? Scalar(1 - 2 * alpha) : Scalar(1);
        }
    return d;
}

oracle::Dense eye(std::size_t n) {
    oracle::Dense d = oracle::zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
    return d;
}

bool braid_holds_dense(const oracle::Dense& r, std::size_t n) {
    const oracle::Dense r1 = oracle::kron(r, eye(n)), r2 = oracle::kron(eye(n), r);
    return oracle::mul(oracle::mul(r1, r2), r1) == oracle::mul(oracle::mul(r2, r1), r2);
}

}  // namespace

TEST_CASE("permutation and deformation matrices", "[braid]") {
    CHECK(build_permutation(1) == SparseMat::identity(1));
    const SparseMat p2 = build_permutation(2);
    CHECK(p2 == SparseMat::from_dense(oracle::Dense{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
    const RepContext c3(3, 1, 2);
    CHECK(apply(build_permutation(3), Vector::basis(9, c3.encode({1, 3}))) == Vector::basis(9, c3.encode({3, 1})));

    CHECK(build_deformation({3, 1, 0}) == SparseMat::identity(9));
    CHECK(build_deformation({2, 1, 1}) == SparseMat::diagonal({1, 1, 1, -1}));
    for (long alpha : {0L, 1L, 2L}) {
        const BraidParams bp{3, 1, alpha};
        const SparseMat D = build_deformation(bp);
        SparseMat proj(9, 9);
        for (std::size_t x = 2; x <= 3; ++x) proj += kron(SparseMat::unit(3, x, x), SparseMat::unit(3, x, x));
        CHECK(mat_mul(D, D) == SparseMat::identity(9) + Scalar(4 * alpha * (alpha - 1)) * proj);
        CHECK(mat_mul(build_permutation(3), D) == mat_mul(D, build_permutation(3)));
    }
}

TEST_CASE("r-check matches its basis action", "[braid]") {
    CHECK(build_rcheck({2, 1, 1}) ==
          SparseMat::from_dense(oracle::Dense{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}}));
    CHECK(build_rcheck({3, 2, 0}) == build_permutation(3));
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            for (long alpha : {0L, 1L, 2L, -1L})
                CHECK(oracle::dense(build_rcheck({n, k, alpha})) == rcheck_oracle(n, k, alpha));
}

TEST_CASE("braid and involutivity iff alpha in {0,1}", "[braid]") {
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t k = 1; k < n; ++k) {
            for (long alpha : {0L, 1L}) {
                const SparseMat rc = build_rcheck({n, k, alpha});
                CHECK(check_braid(rc).passed);
                CHECK(check_involutive(rc).passed);
                CHECK(braid_holds_dense(rcheck_oracle(n, k, alpha), n));
            }
            const SparseMat bad = build_rcheck({n, k, 2});
            const bool both = check_braid(bad).passed && check_involutive(bad).passed;
            CHECK_FALSE(both);
            CHECK_FALSE(check_involutive(build_deformation({n, k, 2})).passed);
        }
    CHECK(check_involutive(build_permutation(3)).passed);
}

TEST_CASE("failed checks carry entry witnesses", "[braid]") {
    const CheckReport r = check_involutive(build_rcheck({2, 1, 2}));
    REQUIRE_FALSE(r.passed);
    REQUIRE_FALSE(r.witnesses.empty());
    // (1 - 2*2)^2 = 9 on e_2 (x) e_2
    CHECK(r.witnesses[0].index == std::vector<std::size_t>{3, 3});
    CHECK(r.witnesses[0].expected == Scalar(1));
    CHECK(r.witnesses[0].actual == Scalar(9));
}

TEST_CASE("Lyubashenko map", "[braid]") {
    const SparseMat l = lyubashenko(3);
    const RepContext c(3, 0, 2);
    // e_x (x) e_y -> e_{y+1} (x) e_{x-1} mod 3
    CHECK(apply(l, Vector::basis(9, c.encode({1, 2}))) == Vector::basis(9, c.encode({3, 3})));
    CHECK(apply(l, Vector::basis(9, c.encode({3, 3}))) == Vector::basis(9, c.encode({1, 2})));
    CHECK(check_braid(l).passed);
    CHECK(check_involutive(l).passed);
}

TEST_CASE("classification", "[braid]") {
    CHECK(classify(build_permutation(3)) == Classification::combinatorial);
    CHECK(classify(build_rcheck({2, 1, 1})) == Classification::non_combinatorial);
    CHECK(classify(lyubashenko(3)) == Classification::combinatorial);
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t k = 1; k < n; ++k) {
            CHECK(classify(build_rcheck({n, k, 0})) == Classification::combinatorial);
            CHECK(classify(build_rcheck({n, k, 1})) == Classification::non_combinatorial);
        }
    // all k bosonic: alpha has nothing to deform
    CHECK(classify(build_rcheck({3, 3, 1})) == Classification::combinatorial);

    // conjugation by A (x) A keeps an involutive braid solution but mixes basis vectors
    const SparseMat a = SparseMat::from_dense(oracle::Dense{{1, 1}, {0, 1}});
    const SparseMat a_inv = SparseMat::from_dense(oracle::Dense{{1, -1}, {0, 1}});
    const SparseMat mixed = mat_mul(mat_mul(kron(a, a), build_rcheck({2, 1, 1})), kron(a_inv, a_inv));
    REQUIRE(check_braid(mixed).passed);
    REQUIRE(check_involutive(mixed).passed);
    CHECK(classify(mixed) == Classification::not_basis_preserving);

    try {
        classify(build_rcheck({2, 1, 2}));
        FAIL("classified a non-involutive matrix");
    } catch (const PreconditionError& e) {
        CHECK_FALSE(e.report().passed);
    }
}

TEST_CASE("Baxterization, parametric YBE and unitarity", "[braid]") {
    const SparseMat P = build_permutation(2);
    CHECK(baxterize(build_rcheck({2, 1, 1}), Scalar(0)) == P);
    CHECK(baxterize(build_rcheck({2, 1, 0}), Scalar(1)) == SparseMat::identity(4) + P);

    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t k = 1; k < n; ++k) {
            CHECK(check_ybe_parametric({n, k, 1}, Scalar(0), Scalar(0)).passed);
            CHECK(check_ybe_parametric({n, k, 1}, Scalar::rational(2, 3), Scalar::rational(1, 5)).passed);
            CHECK(check_ybe_parametric({n, k, 0}, Scalar(3), Scalar::rational(-1, 2)).passed);
        }
    CHECK(check_ybe_parametric({2, 1, 1}, Scalar(1), Scalar::rational(1, 2)).passed);
    CHECK_FALSE(check_ybe_parametric({2, 1, 2}, Scalar(1), Scalar::rational(1, 2)).passed);

    // R12(l) R21(-l) = (1 - l^2) id, evaluated densely
    const BraidParams bp{2, 1, 1};
    const Scalar l = Scalar::rational(1, 2);
    const oracle::Dense Pd = oracle::dense(P);
    const oracle::Dense r12 = oracle::dense(baxterize(build_rcheck(bp), l));
    const oracle::Dense r21 = oracle::mul(oracle::mul(Pd, oracle::dense(baxterize(build_rcheck(bp), -l))), Pd);
    CHECK(oracle::mul(r12, r21) == oracle::dense(Scalar::rational(3, 4) * SparseMat::identity(4)));
    CHECK(check_unitarity(bp, l).passed);
    CHECK(check_unitarity(bp, Scalar(1)).passed);
    CHECK(check_unitarity(bp, Scalar(0)).passed);

    std::mt19937 rng(41);
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t k = 1; k < n; ++k)
            for (int s = 0; s < 10; ++s) CHECK(check_unitarity({n, k, 1}, oracle::small_rational(rng)).passed);
}

TEST_CASE("braid generators and the Hamiltonian", "[braid]") {
    const RepContext ctx(2, 1, 3);
    const SparseMat rc = build_rcheck({2, 1, 1});
    CHECK(braid_generator(rc, 1, ctx) == kron(rc, SparseMat::identity(2)));
    const Vector v222 = Vector::basis(8, ctx.encode({2, 2, 2}));
    CHECK(apply(braid_generator(rc, 2, ctx), v222) == -v222);
    CHECK_THROWS(braid_generator(rc, 3, ctx));

    CHECK(build_hamiltonian(RepContext(3, 2, 2), 1) == build_rcheck({3, 2, 1}));
    const SparseMat H = build_hamiltonian(ctx, 1);
    const Vector v111 = Vector::basis(8, 0);
    CHECK(apply(H, v111) == Scalar(2) * v111);
    CHECK(apply(H, v222) == Scalar(-2) * v222);
    CHECK_THROWS(build_hamiltonian(RepContext(2, 1, 1), 1));
}
