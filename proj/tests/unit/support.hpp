#pragma once

// Dense reference arithmetic used as test oracles. Deliberately naive and
// independent of the sparse kernels under test.

#include "glkm/linalg/scalar.hpp"
#include "glkm/linalg/sparse.hpp"

#include <random>
#include <vector>

namespace oracle {

using glkm::Scalar;
using Dense = std::vector<std::vector<Scalar>>;

inline Dense zeros(std::size_t r, std::size_t c) { return Dense(r, std::vector<Scalar>(c, Scalar(0))); }

inline Dense dense(const glkm::SparseMat& m) {
    Dense d = zeros(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.at(i, j);
    return d;
}

inline Dense mul(const Dense& a, const Dense& b) {
    Dense c = zeros(a.size(), b.empty() ? 0 : b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline Dense kron(const Dense& a, const Dense& b) {
    const std::size_t ra = a.size(), ca = a[0].size(), rb = b.size(), cb = b[0].size();
    Dense c = zeros(ra * rb, ca * cb);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ca; ++j)
            for (std::size_t p = 0; p < rb; ++p)
                for (std::size_t q = 0; q < cb; ++q) c[i * rb + p][j * cb + q] = a[i][j] * b[p][q];
    return c;
}

// Plain Gauss-Jordan over the field; returns the reduced row echelon form.
inline Dense rref(Dense a, std::vector<std::size_t>* pivots = nullptr) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const Scalar inv = Scalar(1) / a[r][c];
        for (auto& v : a[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Scalar f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return a;
}

inline std::size_t rank(const Dense& a) {
    std::vector<std::size_t> piv;
    rref(a, &piv);
    return piv.size();
}

inline std::size_t nullity(const Dense& a) { return (a.empty() ? 0 : a[0].size()) - rank(a); }

inline Scalar small_rational(std::mt19937& rng, bool complex = false) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    Scalar re(mpq_class(num(rng), den(rng)));
    if (!complex) return re;
    return re + Scalar(mpq_class(0), mpq_class(num(rng), den(rng)));
}

inline glkm::SparseMat random_sparse(std::mt19937& rng, std::size_t r, std::size_t c, double density,
                                     bool complex = false) {
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<glkm::Triplet> t;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (u(rng) < density) t.push_back({i, j, small_rational(rng, complex)});
    return glkm::SparseMat::from_triplets(r, c, std::move(t));
}

}  // namespace oracle
