#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "brauerkit/error.hpp"

namespace brauerkit {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : init) {
            if (r.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
            for (long v : r) data_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw Error(Errc::DimensionMismatch, "row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    IntVector row_vector(std::size_t i) const { return IntVector(row(i).begin(), row(i).end()); }

    std::vector<IntVector> row_list() const {
        std::vector<IntVector> out;
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
        return out;
    }

    void append_row(std::span<const Integer> r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw Error(Errc::DimensionMismatch, "row length mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    /// Rows [0, n).
    IntMatrix top_rows(std::size_t n) const {
        IntMatrix m(n, cols_);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
        if (k == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
    }

    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
        if (k == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
    }

    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
    }

    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
    }

    bool row_is_zero(std::size_t i) const {
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) return false;
        return true;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Row vector times matrix.
inline IntVector row_times(std::span<const Integer> v, const IntMatrix& m) {
    if (v.size() != m.rows()) throw Error(Errc::DimensionMismatch, "vector/matrix shape mismatch");
    IntVector out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

/// Matrix times column vector.
inline IntVector times_column(const IntMatrix& m, std::span<const Integer> v) {
    if (v.size() != m.cols()) throw Error(Errc::DimensionMismatch, "matrix/vector shape mismatch");
    IntVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

} // namespace brauerkit
