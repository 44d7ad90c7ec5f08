#include "glkm/linalg/ops.hpp"

#include <algorithm>

#ifdef GLKM_HAVE_OPENMP
#include <omp.h>
#endif

namespace glkm::kernels {

namespace {

void check_mul(const SparseMat& a, const SparseMat& b) {
    if (a.cols() != b.rows()) throw DimensionError("cannot multiply " + a.shape_str() + " by " + b.shape_str());
}

// Sparse accumulator for one output row: dense value slots plus the list of
// touched columns, reused across rows.
struct Accumulator {
    std::vector<Scalar> slot;
    std::vector<char> used;
    std::vector<std::size_t> touched;

    explicit Accumulator(std::size_t n) : slot(n), used(n, 0) {}

    std::vector<Entry> row_product(std::span<const Entry> arow, const SparseMat& b) {
        touched.clear();
        for (const auto& ea : arow) {
            for (const auto& eb : b.row(ea.col)) {
                if (!used[eb.col]) {
                    used[eb.col] = 1;
                    touched.push_back(eb.col);
                    slot[eb.col] = ea.value * eb.value;
                } else {
                    slot[eb.col] += ea.value * eb.value;
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        std::vector<Entry> out;
        out.reserve(touched.size());
        for (std::size_t c : touched) {
            used[c] = 0;
            if (!slot[c].is_zero()) out.push_back({c, std::move(slot[c])});
            slot[c] = Scalar();
        }
        return out;
    }
};

std::vector<Entry> kron_row(const SparseMat& a, const SparseMat& b, std::size_t i) {
    const std::size_t ra = i / b.rows(), rb = i % b.rows();
    std::vector<Entry> out;
    const auto arow = a.row(ra);
    const auto brow = b.row(rb);
    out.reserve(arow.size() * brow.size());
    for (const auto& ea : arow)
        for (const auto& eb : brow) out.push_back({ea.col * b.cols() + eb.col, ea.value * eb.value});
    return out;
}

}  // namespace

SparseMat mat_mul_serial(const SparseMat& a, const SparseMat& b) {
    check_mul(a, b);
    std::vector<std::vector<Entry>> rows(a.rows());
    Accumulator acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) rows[i] = acc.row_product(a.row(i), b);
    return SparseMat::from_rows(b.cols(), std::move(rows));
}

SparseMat kron_serial(const SparseMat& a, const SparseMat& b) {
    const std::size_t nr = a.rows() * b.rows();
    std::vector<std::vector<Entry>> rows(nr);
    for (std::size_t i = 0; i < nr; ++i) rows[i] = kron_row(a, b, i);
    return SparseMat::from_rows(a.cols() * b.cols(), std::move(rows));
}

#ifdef GLKM_HAVE_OPENMP

SparseMat mat_mul_parallel(const SparseMat& a, const SparseMat& b) {
    check_mul(a, b);
    const long nr = static_cast<long>(a.rows());
    std::vector<std::vector<Entry>> rows(a.rows());
#pragma omp parallel
    {
        Accumulator acc(b.cols());
#pragma omp for schedule(dynamic, 16)
        for (long i = 0; i < nr; ++i) rows[i] = acc.row_product(a.row(i), b);
    }
    return SparseMat::from_rows(b.cols(), std::move(rows));
}

SparseMat kron_parallel(const SparseMat& a, const SparseMat& b) {
    const long nr = static_cast<long>(a.rows() * b.rows());
    std::vector<std::vector<Entry>> rows(a.rows() * b.rows());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < nr; ++i) rows[i] = kron_row(a, b, static_cast<std::size_t>(i));
    return SparseMat::from_rows(a.cols() * b.cols(), std::move(rows));
}

bool parallel_available() { return true; }
int max_threads() { return omp_get_max_threads(); }

#else

SparseMat mat_mul_parallel(const SparseMat& a, const SparseMat& b) { return mat_mul_serial(a, b); }
SparseMat kron_parallel(const SparseMat& a, const SparseMat& b) { return kron_serial(a, b); }
bool parallel_available() { return false; }
int max_threads() { return 1; }

#endif

}  // namespace glkm::kernels
