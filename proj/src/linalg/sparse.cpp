#include "glkm/linalg/sparse.hpp"

#include <algorithm>
#include <sstream>

namespace glkm {

namespace {

// Merge two sorted sparse rows into a + sign*b, dropping cancellations.
template <class E, class Key>
std::vector<E> merge_rows(const std::vector<E>& a, const std::vector<E>& b, bool subtract, Key key) {
    std::vector<E> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && key(a[i]) < key(b[j]))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || key(b[j]) < key(a[i])) {
            E e = b[j++];
            if (subtract) e.value = -e.value;
            out.push_back(std::move(e));
        } else {
            E e = a[i++];
            if (subtract)
                e.value -= b[j].value;
            else
                e.value += b[j].value;
            ++j;
            if (!e.value.is_zero()) out.push_back(std::move(e));
        }
    }
    return out;
}

}  // namespace

SparseMat SparseMat::identity(std::size_t n) {
    SparseMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, Scalar(1)});
    return m;
}

SparseMat SparseMat::from_triplets(std::size_t nrows, std::size_t ncols, std::vector<Triplet> triplets) {
    SparseMat m(nrows, ncols);
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t t = 0; t < triplets.size();) {
        const std::size_t r = triplets[t].row, c = triplets[t].col;
        if (r >= nrows || c >= ncols)
            throw DimensionError("triplet (" + std::to_string(r) + "," + std::to_string(c) + ") outside " +
                                 m.shape_str());
        Scalar sum = triplets[t].value;
        for (++t; t < triplets.size() && triplets[t].row == r && triplets[t].col == c; ++t) sum += triplets[t].value;
        if (!sum.is_zero()) m.rows_[r].push_back({c, std::move(sum)});
    }
    return m;
}

SparseMat SparseMat::from_dense(const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr ? rows[0].size() : 0;
    SparseMat m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw DimensionError("ragged dense matrix");
        for (std::size_t j = 0; j < nc; ++j)
            if (!rows[i][j].is_zero()) m.rows_[i].push_back({j, rows[i][j]});
    }
    return m;
}

SparseMat SparseMat::diagonal(const std::vector<Scalar>& diag) {
    SparseMat m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
        if (!diag[i].is_zero()) m.rows_[i].push_back({i, diag[i]});
    return m;
}

SparseMat SparseMat::unit(std::size_t n, std::size_t x, std::size_t y) {
    if (x < 1 || y < 1 || x > n || y > n)
        throw DimensionError("e_{" + std::to_string(x) + "," + std::to_string(y) + "} outside [" +
                             std::to_string(n) + "]");
    SparseMat m(n, n);
    m.rows_[x - 1].push_back({y - 1, Scalar(1)});
    return m;
}

SparseMat SparseMat::from_rows(std::size_t ncols, std::vector<std::vector<Entry>> rows) {
    SparseMat m;
    m.nrows_ = rows.size();
    m.ncols_ = ncols;
    m.rows_ = std::move(rows);
    return m;
}

std::size_t SparseMat::nnz() const {
    std::size_t total = 0;
    for (const auto& r : rows_) total += r.size();
    return total;
}

Scalar SparseMat::at(std::size_t i, std::size_t j) const {
    if (i >= nrows_ || j >= ncols_) throw DimensionError("index outside " + shape_str());
    const auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j) return it->value;
    return Scalar();
}

SparseMat SparseMat::transpose() const {
    SparseMat t(ncols_, nrows_);
    for (std::size_t i = 0; i < nrows_; ++i)
        for (const auto& e : rows_[i]) t.rows_[e.col].push_back({i, e.value});
    return t;
}

SparseMat SparseMat::adjoint() const {
    SparseMat t(ncols_, nrows_);
    for (std::size_t i = 0; i < nrows_; ++i)
        for (const auto& e : rows_[i]) t.rows_[e.col].push_back({i, e.value.conj()});
    return t;
}

std::vector<std::vector<Scalar>> SparseMat::to_dense() const {
    std::vector<std::vector<Scalar>> d(nrows_, std::vector<Scalar>(ncols_));
    for (std::size_t i = 0; i < nrows_; ++i)
        for (const auto& e : rows_[i]) d[i][e.col] = e.value;
    return d;
}

std::string SparseMat::shape_str() const { return std::to_string(nrows_) + "x" + std::to_string(ncols_); }

SparseMat& SparseMat::operator+=(const SparseMat& o) {
    if (nrows_ != o.nrows_ || ncols_ != o.ncols_)
        throw DimensionError("cannot add " + shape_str() + " and " + o.shape_str());
    auto key = [](const Entry& e) { return e.col; };
    for (std::size_t i = 0; i < nrows_; ++i)
        if (!o.rows_[i].empty()) rows_[i] = merge_rows(rows_[i], o.rows_[i], false, key);
    return *this;
}

SparseMat& SparseMat::operator-=(const SparseMat& o) {
    if (nrows_ != o.nrows_ || ncols_ != o.ncols_)
        throw DimensionError("cannot subtract " + o.shape_str() + " from " + shape_str());
    auto key = [](const Entry& e) { return e.col; };
    for (std::size_t i = 0; i < nrows_; ++i)
        if (!o.rows_[i].empty()) rows_[i] = merge_rows(rows_[i], o.rows_[i], true, key);
    return *this;
}

SparseMat& SparseMat::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        for (auto& r : rows_) r.clear();
        return *this;
    }
    if (s.is_one()) return *this;
    for (auto& r : rows_)
        for (auto& e : r) e.value *= s;
    return *this;
}

SparseMat SparseMat::operator-() const {
    SparseMat m = *this;
    for (auto& r : m.rows_)
        for (auto& e : r) e.value = -e.value;
    return m;
}

bool operator==(const SparseMat& a, const SparseMat& b) {
    if (a.nrows_ != b.nrows_ || a.ncols_ != b.ncols_) return false;
    for (std::size_t i = 0; i < a.nrows_; ++i) {
        const auto& x = a.rows_[i];
        const auto& y = b.rows_[i];
        if (x.size() != y.size()) return false;
        for (std::size_t t = 0; t < x.size(); ++t)
            if (x[t].col != y[t].col || x[t].value != y[t].value) return false;
    }
    return true;
}

bool SparseMat::is_canonical() const {
    if (rows_.size() != nrows_) return false;
    for (const auto& r : rows_) {
        for (std::size_t t = 0; t < r.size(); ++t) {
            if (r[t].col >= ncols_ || r[t].value.is_zero() || !r[t].value.is_canonical()) return false;
            if (t > 0 && r[t - 1].col >= r[t].col) return false;
        }
    }
    return true;
}

// ---- Vector ----

Vector Vector::basis(std::size_t dim, std::size_t index, Scalar value) {
    if (index >= dim) throw DimensionError("basis index outside dimension " + std::to_string(dim));
    Vector v(dim);
    if (!value.is_zero()) v.items_.push_back({index, std::move(value)});
    return v;
}

Vector Vector::from_items(std::size_t dim, std::vector<Item> items) {
    Vector v(dim);
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.index < b.index; });
    for (std::size_t t = 0; t < items.size();) {
        const std::size_t idx = items[t].index;
        if (idx >= dim) throw DimensionError("vector index outside dimension " + std::to_string(dim));
        Scalar sum = items[t].value;
        for (++t; t < items.size() && items[t].index == idx; ++t) sum += items[t].value;
        if (!sum.is_zero()) v.items_.push_back({idx, std::move(sum)});
    }
    return v;
}

Vector Vector::from_dense(const std::vector<Scalar>& values) {
    Vector v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!values[i].is_zero()) v.items_.push_back({i, values[i]});
    return v;
}

Scalar Vector::at(std::size_t i) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), i,
                               [](const Item& e, std::size_t c) { return e.index < c; });
    if (it != items_.end() && it->index == i) return it->value;
    return Scalar();
}

Vector& Vector::operator+=(const Vector& o) {
    if (dim_ != o.dim_) throw DimensionError("vector dimensions differ");
    items_ = merge_rows(items_, o.items_, false, [](const Item& e) { return e.index; });
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    if (dim_ != o.dim_) throw DimensionError("vector dimensions differ");
    items_ = merge_rows(items_, o.items_, true, [](const Item& e) { return e.index; });
    return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        items_.clear();
        return *this;
    }
    for (auto& e : items_) e.value *= s;
    return *this;
}

bool operator==(const Vector& a, const Vector& b) {
    if (a.dim_ != b.dim_ || a.items_.size() != b.items_.size()) return false;
    for (std::size_t t = 0; t < a.items_.size(); ++t)
        if (a.items_[t].index != b.items_[t].index || a.items_[t].value != b.items_[t].value) return false;
    return true;
}

Vector apply(const SparseMat& a, const Vector& v) {
    if (a.cols() != v.dim())
        throw DimensionError("cannot apply " + a.shape_str() + " to vector of dimension " + std::to_string(v.dim()));
    std::vector<Vector::Item> acc;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto row = a.row(i);
        if (row.empty()) continue;
        Scalar sum;
        auto it = v.items().begin();
        const auto end = v.items().end();
        for (const auto& e : row) {
            while (it != end && it->index < e.col) ++it;
            if (it == end) break;
            if (it->index == e.col) sum += e.value * it->value;
        }
        if (!sum.is_zero()) acc.push_back({i, std::move(sum)});
    }
    return Vector::from_items(a.rows(), std::move(acc));
}

Scalar inner(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw DimensionError("inner product of vectors with different dimensions");
    Scalar sum;
    auto it = b.items().begin();
    const auto end = b.items().end();
    for (const auto& e : a.items()) {
        while (it != end && it->index < e.index) ++it;
        if (it == end) break;
        if (it->index == e.index) sum += e.value.conj() * it->value;
    }
    return sum;
}

std::optional<Scalar> proportionality(const Vector& a, const Vector& b) {
    if (b.is_zero()) throw std::invalid_argument("proportionality against the zero vector");
    if (a.dim() != b.dim()) return std::nullopt;
    if (a.is_zero()) return Scalar();
    if (a.nnz() != b.nnz()) return std::nullopt;
    const Scalar c = a.items()[0].value / b.items()[0].value;
    for (std::size_t t = 0; t < a.nnz(); ++t) {
        if (a.items()[t].index != b.items()[t].index) return std::nullopt;
        if (a.items()[t].value != c * b.items()[t].value) return std::nullopt;
    }
    return c;
}

SparseMat columns_matrix(const std::vector<Vector>& vectors) {
    const std::size_t dim = vectors.empty() ? 0 : vectors[0].dim();
    std::vector<Triplet> t;
    for (std::size_t c = 0; c < vectors.size(); ++c) {
        if (vectors[c].dim() != dim) throw DimensionError("columns of different dimension");
        for (const auto& e : vectors[c].items()) t.push_back({e.index, c, e.value});
    }
    return SparseMat::from_triplets(dim, vectors.size(), std::move(t));
}

Vector kron(const Vector& a, const Vector& b) {
    std::vector<Vector::Item> items;
    items.reserve(a.nnz() * b.nnz());
    for (const auto& x : a.items())
        for (const auto& y : b.items()) items.push_back({x.index * b.dim() + y.index, x.value * y.value});
    return Vector::from_items(a.dim() * b.dim(), std::move(items));
}

}  // namespace glkm
