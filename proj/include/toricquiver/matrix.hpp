#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toricquiver {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a normalized rational; throws std::domain_error on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p", "p/q". Result is normalized.
Rational parse_rational(const std::string& text);

/// Renders "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense row-major matrix. Zero rows or columns are allowed so that
/// maps to and from the zero space compose normally.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const { return data_; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
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
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum: shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference: shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) x *= s;
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("matrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                           " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    Matrix out(a.rows_, b.cols_);
    T tmp;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          tmp = aik * b(k, j);
          out(i, j) += tmp;
        }
      }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ",[" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? "," : "") << m(r, c).get_str();
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatZ = Matrix<Integer>;
using MatQ = Matrix<Rational>;
using VecZ = std::vector<Integer>;
using VecQ = std::vector<Rational>;

MatQ to_rational(const MatZ& a);
/// Throws std::domain_error if some entry is not an integer.
MatZ to_integer(const MatQ& a);

}  // namespace toricquiver
