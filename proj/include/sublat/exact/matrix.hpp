#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sublat/errors.hpp"

namespace sublat::exact {

/// Dense row-major matrix over an exact scalar type.
///
/// A default-constructed matrix is empty (0 x 0) and only useful as a
/// placeholder; every sized constructor requires rows >= 1 and cols >= 1.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    require_shape(rows, cols);
  }

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    require_shape(rows, cols);
    if (data_.size() != rows * cols) {
      throw DimensionError("matrix entry count does not match shape");
    }
  }

  /// Builds from nested braces, e.g. `IntMatrix::from_rows({{2, 0}, {1, 1}})`.
  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<T> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionError("ragged row list");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(entries));
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  const std::vector<T>& entries() const { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = -a.data_[k];
    return r;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = s * a.data_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    T tmp;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          tmp = aik * b(k, j);
          r(i, j) += tmp;
        }
      }
    }
    return r;
  }

 private:
  static void require_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix must have at least one row and column");
  }
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;
using IntVector = std::vector<mpz_class>;

RatMatrix to_rational(const IntMatrix& a);

/// Converts a rational matrix whose entries are all integers; throws ConsistencyError otherwise.
IntMatrix to_integer(const RatMatrix& a);

bool is_integral(const RatMatrix& a);

/// Least common multiple of all denominators (1 for an integral matrix).
mpz_class common_denominator(const RatMatrix& a);

/// Row vector times matrix.
IntVector row_times(std::span<const mpz_class> v, const IntMatrix& a);

mpz_class dot(std::span<const mpz_class> a, std::span<const mpz_class> b);

/// Largest |entry|.
mpz_class max_abs(const IntMatrix& a);
mpq_class max_abs(const RatMatrix& a);

std::string to_string(const IntMatrix& a);
std::string to_string(const RatMatrix& a);
std::ostream& operator<<(std::ostream& os, const IntMatrix& a);
std::ostream& operator<<(std::ostream& os, const RatMatrix& a);

}  // namespace sublat::exact
