#include "support.hpp"

#include "glkm/braid/braid.hpp"
#include "glkm/gl11/gl11.hpp"
#include "glkm/linalg/ops.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

using namespace glkm;
using namespace glkm::gl11;

namespace {

std::size_t binomial(std::size_t n, std::size_t r) {
    std::size_t c = 1;
    for (std::size_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
    return c;
}

Vector bits(std::size_t sites, std::size_t index) { return Vector::basis(std::size_t{1} << sites, index); }

// Tableau rule restated: rows weakly increase with no repeated fermionic
// letter, columns weakly increase with no repeated bosonic letter.
bool ssyt_oracle(const Tableau& t, std::size_t k) {
    for (std::size_t r = 0; r < t.size(); ++r)
        for (std::size_t c = 0; c < t[r].size(); ++c) {
            if (c + 1 < t[r].size()) {
                if (t[r][c] > t[r][c + 1]) return false;
                if (t[r][c] == t[r][c + 1] && t[r][c] > k) return false;
            }
            if (r + 1 < t.size() && c < t[r + 1].size()) {
                if (t[r][c] > t[r + 1][c]) return false;
                if (t[r][c] == t[r + 1][c] && t[r][c] <= k) return false;
            }
        }
    return true;
}

// Every filling of the shape with letters 1..n, filtered by the oracle rule.
std::size_t brute_count(std::size_t n, std::size_t k, const std::vector<std::size_t>& shape) {
    std::size_t cells = 0;
    for (auto s : shape) cells += s;
    std::size_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= n;
    std::size_t count = 0;
    for (std::size_t code = 0; code < total; ++code) {
        Tableau t;
        std::size_t rest = code;
        for (auto len : shape) {
            t.emplace_back();
            for (std::size_t c = 0; c < len; ++c) {
                t.back().push_back(rest % n + 1);
                rest /= n;
            }
        }
        count += ssyt_oracle(t, k);
    }
    return count;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("XX chain Hamiltonian", "[gl11]") {
    CHECK(xx_pauli_hamiltonian(2) ==
          SparseMat::from_dense(oracle::Dense{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}}));
    for (std::size_t N = 2; N <= 6; ++N) {
        CHECK(xx_hamiltonian_check(N).passed);
        CHECK(xx_pauli_hamiltonian(N) == build_hamiltonian(RepContext(2, 1, N), 1));
    }
    CHECK_THROWS(xx_pauli_hamiltonian(1));
}

TEST_CASE("two-dimensional highest-weight modules", "[gl11]") {
    const TwoDimModule m = hw_module({Scalar(2), Scalar(3), Scalar(5)});
    CHECK_FALSE(m.degenerate);
    CHECK(apply(m.f, Vector::basis(2, 1)) == Scalar(7) * Vector::basis(2, 0));
    CHECK(check_hw_module({Scalar(2), Scalar(3), Scalar(5)}).passed);

    // {eps2, f} equals -fh; the -hf form is refuted by this module
    CHECK(anticommutator(m.eps2, m.f) == -mat_mul(m.f, m.h));
    CHECK(anticommutator(m.eps2, m.f) != -mat_mul(m.h, m.f));

    const TwoDimModule d = hw_module({Scalar(1), Scalar(2), Scalar(2)});
    CHECK(d.degenerate);
    CHECK(d.f.is_zero());
    const CheckReport dr = check_hw_module({Scalar(1), Scalar(2), Scalar(2)});
    CHECK(dr.passed);
    CHECK_FALSE(dr.notes.empty());

    std::mt19937 rng(7);
    for (int s = 0; s < 25; ++s) {
        const Scalar l1 = oracle::small_rational(rng, s % 2 == 1), l2 = oracle::small_rational(rng, s % 3 == 1);
        Scalar xi = oracle::small_rational(rng);
        if (xi.is_zero()) xi = Scalar(1);
        CHECK(check_hw_module({l1, l2, xi}).passed);
    }
}

TEST_CASE("chain operators satisfy the gl(1|1) relations", "[gl11]") {
    for (std::size_t N = 1; N <= 5; ++N)
        for (LegOrder order : {LegOrder::standard, LegOrder::opposite}) {
            const ChainOps o = chain_ops(N, order);
            CHECK(check_gl11_relations(o.eps1, o.eps2, o.h, o.e, o.f, "chain").passed);
            CHECK(anticommutator(o.eps2, o.f) == -mat_mul(o.f, o.h));
        }
    for (std::size_t N = 1; N <= 6; ++N) CHECK(verify_adjoint_identity(N).passed);
}

TEST_CASE("weight spaces and highest-weight kernels", "[gl11]") {
    const auto ws = weight_space(3, 1);
    REQUIRE(ws.size() == 3);
    CHECK(ws[0] == bits(3, 1));
    CHECK(ws[1] == bits(3, 2));
    CHECK(ws[2] == bits(3, 4));
    CHECK_THROWS(weight_space(2, 3));

    CHECK(highest_weight_kernel(2, 1) == std::vector<Vector>{bits(2, 1) - bits(2, 2)});
    CHECK(highest_weight_kernel(3, 0) == std::vector<Vector>{bits(3, 0)});
    CHECK_THROWS(highest_weight_kernel(3, 3));

    for (std::size_t N = 1; N <= 7; ++N) {
        const SparseMat f = chain_ops(N).f;
        for (std::size_t p = 0; p < N; ++p) {
            const auto ker = highest_weight_kernel(N, p);
            const auto w = weight_space(N, p);
            CHECK(ker.size() == binomial(N - 1, p));
            CHECK(ker.size() == oracle::nullity(oracle::dense(mat_mul(f, columns_matrix(w)))));
            CHECK(oracle::rank(oracle::dense(columns_matrix(ker))) == ker.size());
            for (const auto& v : ker) {
                CHECK(apply(f, v).is_zero());
                REQUIRE_FALSE(v.is_zero());
                CHECK(v.items()[0].value.re() > 0);
                mpz_class g = 0;
                for (const auto& it : v.items()) {
                    CHECK(it.value.is_real());
                    CHECK(it.value.re().get_den() == 1);
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), it.value.re().get_num_mpz_t());
                    CHECK(static_cast<std::size_t>(__builtin_popcountll(it.index)) == p);
                }
                CHECK(g == 1);
            }
        }
    }
}

TEST_CASE("kernel vectors generate two-dimensional modules", "[gl11]") {
    const ChainOps o = chain_ops(2);
    const Vector v0 = bits(2, 0);
    const Vector up = apply(o.e, v0);
    CHECK(up == bits(2, 1) + bits(2, 2));
    CHECK(apply(o.f, up) == Scalar(2) * v0);
    CHECK(apply(o.eps1, v0) == Scalar(2) * v0);
    CHECK(apply(o.eps1, up) == up);
    CHECK(apply(o.eps2, up) == up);
    CHECK(apply(o.h, up) == -up);

    for (std::size_t N = 1; N <= 6; ++N)
        for (std::size_t p = 0; p < N; ++p)
            for (const auto& v : highest_weight_kernel(N, p)) CHECK(verify_kernel_module(N, p, v).passed);
    CHECK_THROWS_AS(verify_kernel_module(2, 0, bits(2, 1)), PreconditionError);
}

TEST_CASE("orthogonality of the kernel chains", "[gl11]") {
    for (std::size_t N = 2; N <= 6; ++N)
        for (std::size_t p = 0; p + 2 <= N; ++p) CHECK(verify_orthogonality(N, p).passed);
    CHECK_THROWS(verify_orthogonality(3, 2));
}

TEST_CASE("tensor product decomposition", "[gl11]") {
    const Vector e1 = bits(1, 0);
    const TensorDecomposition t = tensor_decompose(1, 0, 1, 0, e1, e1);
    CHECK(t.report.passed);
    CHECK(t.a_low == bits(2, 0));
    CHECK(t.a_high == bits(2, 1) + bits(2, 2));
    CHECK(t.b_low == bits(2, 2) - bits(2, 1));
    CHECK(t.b_high.is_zero() == false);
    CHECK_THROWS(tensor_decompose(1, 0, 0, 0, e1, Vector(1)));

    for (auto [n1, n2] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}})
        for (std::size_t p1 = 0; p1 < n1; ++p1)
            for (std::size_t p2 = 0; p2 < n2; ++p2)
                for (const auto& v1 : highest_weight_kernel(n1, p1))
                    for (const auto& v2 : highest_weight_kernel(n2, p2)) {
                        const TensorDecomposition d = tensor_decompose(n1, p1, n2, p2, v1, v2);
                        INFO(d.report.name);
                        CHECK(d.report.passed);
                        const ChainOps o = chain_ops(n1 + n2);
                        CHECK(apply(o.f, d.b_low).is_zero());
                        CHECK(oracle::rank(oracle::dense(columns_matrix({d.a_low, d.a_high, d.b_low, d.b_high}))) == 4);
                    }
}

TEST_CASE("super semistandard tableaux", "[gl11][ssyt]") {
    CHECK(valid_ssyt({{1, 1}, {2}}, 1));
    CHECK(valid_ssyt({{1, 2}, {2}}, 1));
    CHECK_FALSE(valid_ssyt({{1, 2, 2}}, 1));
    CHECK_FALSE(valid_ssyt({{1}, {1}}, 1));
    CHECK(valid_ssyt({{2}, {2}}, 1));
    CHECK(enumerate_ssyt(2, 1, {2, 1}) == std::vector<Tableau>{{{1, 1}, {2}}, {{1, 2}, {2}}});
    CHECK(hook_shape(4, 2) == std::vector<std::size_t>{2, 1, 1});
    CHECK(render({{1, 1, 2}, {2}}) == "1 1 2\n2\n");
    CHECK_THROWS(enumerate_ssyt(2, 1, {1, 2}));

    for (const std::vector<std::size_t>& shape :
         {std::vector<std::size_t>{1}, {2}, {3}, {2, 1}, {1, 1, 1}, {2, 2}, {3, 1}, {2, 1, 1}, {3, 2}, {2, 2, 1},
          {3, 3}, {4, 2, 1}, {3, 1, 1, 1}})
        for (auto [n, k] : {std::pair<std::size_t, std::size_t>{2, 1}, {2, 0}, {2, 2}, {3, 1}, {3, 2}}) {
            std::size_t cells = 0;
            for (auto s : shape) cells += s;
            if (n == 3 && cells > 6) continue;
            const auto all = enumerate_ssyt(n, k, shape);
            CHECK(all.size() == brute_count(n, k, shape));
            for (const auto& t : all) CHECK(ssyt_oracle(t, k));
        }
    for (const std::vector<std::size_t>& shape :
         {std::vector<std::size_t>{2, 2}, {3, 2}, {2, 2, 1}, {3, 3}, {4, 2, 1}})
        CHECK(enumerate_ssyt(2, 1, shape).empty());
}

TEST_CASE("hook tableaux pair with the kernel chain", "[gl11][ssyt]") {
    for (std::size_t N = 1; N <= 8; ++N)
        for (std::size_t p = 0; p < N; ++p) {
            const SsytPairing s = ssyt_bijection(N, p);
            CHECK(s.report.passed);
            CHECK(enumerate_ssyt(2, 1, hook_shape(N, p)).size() == 2);
            const std::string file =
                std::string(GLKM_GOLDEN_DIR) + "/ssyt_N" + std::to_string(N) + "_p" + std::to_string(p) + ".txt";
            CHECK("-- varpi_p\n" + render(s.low) + "-- varpi_p+1\n" + render(s.high) == slurp(file));
        }
}
