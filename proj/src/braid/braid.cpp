#include "glkm/braid/braid.hpp"

#include "glkm/linalg/ops.hpp"

#include <stdexcept>

namespace glkm {

std::string BraidParams::str() const {
    return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " alpha=" + std::to_string(alpha);
}

SparseMat build_permutation(std::size_t n) {
    if (n < 1) throw std::invalid_argument("permutation needs n >= 1");
    return swap_factors(n, n);
}

SparseMat build_deformation(const BraidParams& p) {
    if (p.k > p.n) throw std::invalid_argument("k exceeds n in " + p.str());
    std::vector<Scalar> diag(p.n * p.n, Scalar(1));
    const Scalar fermion(1 - 2 * p.alpha);
    for (std::size_t x = p.k + 1; x <= p.n; ++x) diag[(x - 1) * p.n + (x - 1)] = fermion;
    return SparseMat::diagonal(diag);
}

SparseMat build_rcheck(const BraidParams& p) { return mat_mul(build_deformation(p), build_permutation(p.n)); }

SparseMat lyubashenko(std::size_t n) {
    std::vector<Triplet> t;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t z = (y + 1) % n, w = (x + n - 1) % n;
            t.push_back({z * n + w, x * n + y, Scalar(1)});
        }
    return SparseMat::from_triplets(n * n, n * n, std::move(t));
}

std::size_t local_dim(const SparseMat& m) {
    if (!m.is_square()) throw DimensionError("expected a square operator, got " + m.shape_str());
    std::size_t n = 0;
    while (n * n < m.rows()) ++n;
    if (n * n != m.rows()) throw DimensionError("operator dimension " + std::to_string(m.rows()) + " is not n^2");
    return n;
}

CheckReport check_braid(const SparseMat& rcheck) {
    Stopwatch sw;
    CheckReport rep("braid");
    const std::size_t n = local_dim(rcheck);
    const SparseMat id = SparseMat::identity(n);
    const SparseMat a = kron(rcheck, id);
    const SparseMat b = kron(id, rcheck);
    rep.expect_equal("(r(x)1)(1(x)r)(r(x)1) vs (1(x)r)(r(x)1)(1(x)r)", mat_mul(mat_mul(b, a), b),
                     mat_mul(mat_mul(a, b), a));
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

CheckReport check_involutive(const SparseMat& m) {
    Stopwatch sw;
    CheckReport rep("involutive");
    if (!m.is_square()) throw DimensionError("involutivity needs a square matrix, got " + m.shape_str());
    rep.expect_equal("r^2 vs id", SparseMat::identity(m.rows()), mat_mul(m, m));
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::combinatorial: return "combinatorial";
        case Classification::non_combinatorial: return "non-combinatorial";
        case Classification::not_basis_preserving: return "not-basis-preserving";
    }
    return "unknown";
}

Classification classify(const SparseMat& rcheck) {
    CheckReport pre("classify precondition");
    pre.absorb(check_braid(rcheck));
    pre.absorb(check_involutive(rcheck));
    if (!pre.passed) throw PreconditionError("classify expects an involutive braid solution", pre);

    // Column structure: each tensor basis vector must map to a single basis
    // vector (monomial matrix). Coefficient +1 everywhere is the set-theoretic case.
    const SparseMat cols = rcheck.transpose();
    bool unit_coefficients = true;
    for (std::size_t j = 0; j < cols.rows(); ++j) {
        const auto c = cols.row(j);
        if (c.size() != 1) return Classification::not_basis_preserving;
        if (!c[0].value.is_one()) unit_coefficients = false;
    }
    return unit_coefficients ? Classification::combinatorial : Classification::non_combinatorial;
}

SparseMat baxterize(const SparseMat& rcheck, const Scalar& lambda) {
    const SparseMat p = build_permutation(local_dim(rcheck));
    return lambda * mat_mul(p, rcheck) + p;
}

CheckReport check_ybe_parametric(const BraidParams& p, const Scalar& l1, const Scalar& l2) {
    Stopwatch sw;
    CheckReport rep("ybe lambda1=" + l1.str() + " lambda2=" + l2.str());
    const SparseMat rc = build_rcheck(p);
    const std::vector<std::size_t> dims{p.n, p.n, p.n};
    const SparseMat r12 = embed_legs(baxterize(rc, l1 - l2), dims, {0, 1});
    const SparseMat r13 = embed_legs(baxterize(rc, l1), dims, {0, 2});
    const SparseMat r23 = embed_legs(baxterize(rc, l2), dims, {1, 2});
    rep.expect_equal("R12 R13 R23 vs R23 R13 R12", mat_mul(mat_mul(r23, r13), r12), mat_mul(mat_mul(r12, r13), r23));
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

CheckReport check_unitarity(const BraidParams& p, const Scalar& lambda) {
    Stopwatch sw;
    CheckReport rep("unitarity lambda=" + lambda.str());
    const SparseMat rc = build_rcheck(p);
    const SparseMat perm = build_permutation(p.n);
    const SparseMat r12 = baxterize(rc, lambda);
    const SparseMat r21 = mat_mul(mat_mul(perm, baxterize(rc, -lambda)), perm);
    const Scalar scale = Scalar(1) - lambda * lambda;
    rep.expect_equal("R12(l) R21(-l) vs (1-l^2) id", scale * SparseMat::identity(p.n * p.n), mat_mul(r12, r21));
    rep.duration_ms = sw.elapsed_ms();
    return rep;
}

SparseMat braid_generator(const SparseMat& rcheck, std::size_t j, const RepContext& ctx) {
    if (j < 1 || j + 1 > ctx.N) throw std::out_of_range("braid generator index outside [N-1]");
    return embed_at_site(rcheck, j, ctx.n, ctx.N);
}

SparseMat build_hamiltonian(const RepContext& ctx, long alpha) {
    if (ctx.N < 2) throw std::invalid_argument("the Hamiltonian needs at least two sites");
    const SparseMat rc = build_rcheck({ctx.n, ctx.k, alpha});
    SparseMat h(ctx.dim(), ctx.dim());
    for (std::size_t j = 1; j < ctx.N; ++j) h += braid_generator(rc, j, ctx);
    return h;
}

}  // namespace glkm
