#pragma once

#include "glkm/linalg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace glkm {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Entry {
    std::size_t col;
    Scalar value;
};

struct Triplet {
    std::size_t row;
    std::size_t col;
    Scalar value;
};

// Row-compressed sparse matrix over Gaussian rationals. Rows are sorted by
// column and never store zeros, so two matrices are equal iff their shapes
// and stored entries agree.
class SparseMat {
public:
    SparseMat() = default;
    SparseMat(std::size_t nrows, std::size_t ncols) : nrows_(nrows), ncols_(ncols), rows_(nrows) {}

    static SparseMat identity(std::size_t n);
    static SparseMat zero(std::size_t nrows, std::size_t ncols) { return SparseMat(nrows, ncols); }
    // Duplicate positions are summed; zero sums are dropped.
    static SparseMat from_triplets(std::size_t nrows, std::size_t ncols, std::vector<Triplet> triplets);
    static SparseMat from_dense(const std::vector<std::vector<Scalar>>& rows);
    static SparseMat diagonal(const std::vector<Scalar>& diag);
    // e_{x,y} on C^n with 1-based labels x, y (the usual matrix-unit notation).
    static SparseMat unit(std::size_t n, std::size_t x, std::size_t y);
    // Builds directly from canonical rows; each row must be sorted and zero-free.
    static SparseMat from_rows(std::size_t ncols, std::vector<std::vector<Entry>> rows);

    std::size_t rows() const { return nrows_; }
    std::size_t cols() const { return ncols_; }
    std::size_t nnz() const;
    bool is_square() const { return nrows_ == ncols_; }
    bool is_zero() const { return nnz() == 0; }

    std::span<const Entry> row(std::size_t i) const { return rows_[i]; }
    Scalar at(std::size_t i, std::size_t j) const;

    SparseMat transpose() const;
    SparseMat adjoint() const;
    std::vector<std::vector<Scalar>> to_dense() const;
    std::string shape_str() const;

    SparseMat& operator+=(const SparseMat& o);
    SparseMat& operator-=(const SparseMat& o);
    SparseMat& operator*=(const Scalar& s);

    friend SparseMat operator+(SparseMat a, const SparseMat& b) { return a += b; }
    friend SparseMat operator-(SparseMat a, const SparseMat& b) { return a -= b; }
    friend SparseMat operator*(const Scalar& s, SparseMat a) { return a *= s; }
    SparseMat operator-() const;

    friend bool operator==(const SparseMat& a, const SparseMat& b);
    friend bool operator!=(const SparseMat& a, const SparseMat& b) { return !(a == b); }

    // Every stored entry nonzero, in range, strictly increasing column order.
    bool is_canonical() const;

private:
    std::size_t nrows_ = 0;
    std::size_t ncols_ = 0;
    std::vector<std::vector<Entry>> rows_;
};

// Sparse column vector with sorted, zero-free storage.
class Vector {
public:
    struct Item {
        std::size_t index;
        Scalar value;
    };

    Vector() = default;
    explicit Vector(std::size_t dim) : dim_(dim) {}

    static Vector basis(std::size_t dim, std::size_t index, Scalar value = 1);
    static Vector from_items(std::size_t dim, std::vector<Item> items);
    static Vector from_dense(const std::vector<Scalar>& values);

    std::size_t dim() const { return dim_; }
    std::span<const Item> items() const { return items_; }
    std::size_t nnz() const { return items_.size(); }
    bool is_zero() const { return items_.empty(); }
    Scalar at(std::size_t i) const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Scalar& s);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& s, Vector a) { return a *= s; }
    Vector operator-() const { return Scalar(-1) * *this; }

    friend bool operator==(const Vector& a, const Vector& b);
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

private:
    std::size_t dim_ = 0;
    std::vector<Item> items_;
};

Vector apply(const SparseMat& a, const Vector& v);
// <a, b> = a^dagger b.
Scalar inner(const Vector& a, const Vector& b);
// Returns c with a == c * b when such c exists. b must be nonzero.
std::optional<Scalar> proportionality(const Vector& a, const Vector& b);
// Vectors as the columns of a dim x count matrix.
SparseMat columns_matrix(const std::vector<Vector>& vectors);
Vector kron(const Vector& a, const Vector& b);

}  // namespace glkm
