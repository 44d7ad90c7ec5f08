// Serial reference vs OpenMP kernels on the matrices the verifier actually builds:
// N-site coproduct images and braid-generator embeddings.
#include "glkm/braid/braid.hpp"
#include "glkm/linalg/ops.hpp"
#include "glkm/yangian/generators.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

using namespace glkm;

namespace {

double time_ms(const std::function<SparseMat()>& f, int reps, SparseMat& out) {
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) out = f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

bool row(const std::string& what, const std::function<SparseMat()>& serial, const std::function<SparseMat()>& par,
         int reps) {
    SparseMat a, b;
    const double ts = time_ms(serial, reps, a);
    const double tp = time_ms(par, reps, b);
    const bool same = a == b;
    std::printf("%-34s %8zu %10.3f %10.3f %7.2fx  %s\n", what.c_str(), a.rows(), ts, tp, tp > 0 ? ts / tp : 0.0,
                same ? "match" : "MISMATCH");
    return same;
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("openmp: %s, threads: %d\n", kernels::parallel_available() ? "yes" : "no", kernels::max_threads());
    std::printf("%-34s %8s %10s %10s %8s\n", "case", "dim", "serial ms", "omp ms", "speedup");

    bool ok = true;
    for (auto [n, N] : {std::pair<std::size_t, std::size_t>{2, 10}, {3, 6}, {3, 7}, {4, 5}}) {
        const RepContext ctx(n, 1, N);
        const SparseMat t12 = coproduct_matrix(GenSymbol::l1(1, 2), ctx);
        const SparseMat t21 = coproduct_matrix(GenSymbol::l1(2, 1), ctx);
        const SparseMat r1 = braid_generator(build_rcheck({n, 1, 1}), 1, ctx);
        const std::string tag = " n=" + std::to_string(n) + " N=" + std::to_string(N);
        ok &= row("mat_mul t12*t21" + tag, [&] { return kernels::mat_mul_serial(t12, t21); },
                  [&] { return kernels::mat_mul_parallel(t12, t21); }, reps);
        ok &= row("mat_mul r1*t12" + tag, [&] { return kernels::mat_mul_serial(r1, t12); },
                  [&] { return kernels::mat_mul_parallel(r1, t12); }, reps);

        const RepContext half(n, 1, N / 2);
        const SparseMat a = coproduct_matrix(GenSymbol::l1(1, 2), half);
        const SparseMat b = coproduct_matrix(GenSymbol::l1(2, 1), RepContext(n, 1, N - N / 2));
        ok &= row("kron" + tag, [&] { return kernels::kron_serial(a, b); },
                  [&] { return kernels::kron_parallel(a, b); }, reps);
    }
    return ok ? 0 : 1;
}
