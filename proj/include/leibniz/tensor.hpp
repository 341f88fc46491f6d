#ifndef LEIBNIZ_TENSOR_HPP
#define LEIBNIZ_TENSOR_HPP

#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

inline std::size_t guard_max_coeffs() {
    if (const char* env = std::getenv("LEIBNIZ_GUARD_MAX_COEFFS")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 10'000'000;
}

inline void check_allocation(std::size_t count) {
    if (count > guard_max_coeffs())
        throw AllocationGuard("tensor allocation of " + std::to_string(count) +
                              " coefficients exceeds the guard limit");
}

/// Dense matrix over a field context. Matrices act on column vectors.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Scalar(f)) {
        check_allocation(data_.size());
    }

    static Matrix identity(Field f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = one(f);
        return m;
    }

    Field field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& s : data_)
            if (!s.is_zero()) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& s : r.data_) s = -s;
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw ShapeMismatch("matrix product " + shape_str() + " * " + o.shape_str());
        Matrix r(field_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }
    Matrix scaled(const Scalar& c) const {
        Matrix r = *this;
        for (auto& s : r.data_) s *= c;
        return r;
    }

    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw ShapeMismatch("matrix-vector product");
        std::vector<Scalar> r(rows_, Scalar(field_));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    /// Exact Gauss-Jordan inverse. Throws SingularMatrix with the rank found.
    Matrix inverse() const {
        if (rows_ != cols_) throw ShapeMismatch("inverse of non-square matrix");
        int n = rows_;
        Matrix a = *this;
        Matrix inv = identity(field_, n);
        int rank = 0;
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = rank; r < n; ++r)
                if (!a.at(r, col).is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            a.swap_rows(rank, pivot);
            inv.swap_rows(rank, pivot);
            Scalar d = a.at(rank, col).inverse();
            a.scale_row(rank, d);
            inv.scale_row(rank, d);
            for (int r = 0; r < n; ++r) {
                if (r == rank || a.at(r, col).is_zero()) continue;
                Scalar factor = a.at(r, col);
                a.add_scaled_row(r, rank, -factor);
                inv.add_scaled_row(r, rank, -factor);
            }
            ++rank;
        }
        if (rank < n) throw SingularMatrix(rank);
        return inv;
    }

    int rank() const {
        Matrix a = *this;
        int rank = 0;
        for (int col = 0; col < cols_ && rank < rows_; ++col) {
            int pivot = -1;
            for (int r = rank; r < rows_; ++r)
                if (!a.at(r, col).is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            a.swap_rows(rank, pivot);
            Scalar d = a.at(rank, col).inverse();
            a.scale_row(rank, d);
            for (int r = rank + 1; r < rows_; ++r) {
                if (a.at(r, col).is_zero()) continue;
                a.add_scaled_row(r, rank, -a.at(r, col));
            }
            ++rank;
        }
        return rank;
    }

private:
    Field field_;
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;

    std::string shape_str() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ShapeMismatch("matrix shapes " + shape_str() + " vs " + o.shape_str());
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void scale_row(int r, const Scalar& c) {
        for (int j = 0; j < cols_; ++j) at(r, j) *= c;
    }
    void add_scaled_row(int dst, int src, const Scalar& c) {
        for (int j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
    }
};

/// Dense tensor with an arbitrary shape; order-k elements of a dim-n space
/// use shape [n]^k.
class Tensor {
public:
    Tensor() = default;
    Tensor(Field f, std::vector<int> shape) : field_(f), shape_(std::move(shape)) {
        std::size_t count = 1;
        for (int d : shape_) {
            if (d <= 0) throw ShapeMismatch("tensor dimension must be positive");
            count *= static_cast<std::size_t>(d);
        }
        check_allocation(count);
        data_.assign(count, Scalar(f));
    }

    Field field() const { return field_; }
    const std::vector<int>& shape() const { return shape_; }
    int order() const { return static_cast<int>(shape_.size()); }

    std::size_t size() const { return data_.size(); }
    Scalar& operator[](std::size_t i) { return data_[i]; }
    const Scalar& operator[](std::size_t i) const { return data_[i]; }

    std::size_t flat(const std::vector<int>& idx) const {
        std::size_t f = 0;
        for (std::size_t k = 0; k < shape_.size(); ++k) f = f * shape_[k] + idx[k];
        return f;
    }
    Scalar& at(const std::vector<int>& idx) { return data_[flat(idx)]; }
    const Scalar& at(const std::vector<int>& idx) const { return data_[flat(idx)]; }

    std::vector<int> unflat(std::size_t f) const {
        std::vector<int> idx(shape_.size());
        for (std::size_t k = shape_.size(); k-- > 0;) {
            idx[k] = static_cast<int>(f % shape_[k]);
            f /= shape_[k];
        }
        return idx;
    }

    bool is_zero() const {
        for (const auto& s : data_)
            if (!s.is_zero()) return false;
        return true;
    }

    Tensor operator+(const Tensor& o) const {
        require_same_shape(o);
        Tensor r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }
    Tensor operator-(const Tensor& o) const {
        require_same_shape(o);
        Tensor r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }
    Tensor operator-() const {
        Tensor r = *this;
        for (auto& s : r.data_) s = -s;
        return r;
    }
    Tensor scaled(const Scalar& c) const {
        Tensor r = *this;
        for (auto& s : r.data_) s *= c;
        return r;
    }

    bool operator==(const Tensor& o) const { return shape_ == o.shape_ && data_ == o.data_; }

private:
    Field field_;
    std::vector<int> shape_;
    std::vector<Scalar> data_;

    void require_same_shape(const Tensor& o) const {
        if (shape_ != o.shape_) throw ShapeMismatch("tensor shapes differ");
    }
};

/// Applies M to one tensor slot: linear in T, contracts M's columns against
/// the slot index.
inline Tensor tensor_contract(const Tensor& t, const Matrix& m, int slot) {
    if (slot < 0 || slot >= t.order()) throw ShapeMismatch("contraction slot out of range");
    if (m.cols() != t.shape()[slot]) throw ShapeMismatch("matrix columns vs slot dimension");
    std::vector<int> out_shape = t.shape();
    out_shape[slot] = m.rows();
    Tensor r(t.field(), out_shape);
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (t[f].is_zero()) continue;
        std::vector<int> idx = t.unflat(f);
        int src = idx[slot];
        for (int i = 0; i < m.rows(); ++i) {
            if (m.at(i, src).is_zero()) continue;
            idx[slot] = i;
            r.at(idx) += m.at(i, src) * t[f];
        }
    }
    return r;
}

/// Exchanges two tensor slots; the exchange operator tau12 is swap_slots(t, 0, 1).
inline Tensor swap_slots(const Tensor& t, int a, int b) {
    if (a < 0 || b < 0 || a >= t.order() || b >= t.order()) throw ShapeMismatch("swap slot out of range");
    std::vector<int> out_shape = t.shape();
    std::swap(out_shape[a], out_shape[b]);
    Tensor r(t.field(), out_shape);
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (t[f].is_zero()) continue;
        std::vector<int> idx = t.unflat(f);
        std::swap(idx[a], idx[b]);
        r.at(idx) += t[f];
    }
    return r;
}

}  // namespace leibniz

#endif
