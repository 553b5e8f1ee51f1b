#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace catsys {

using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major square-or-rectangular matrix. Only what the root-system
/// code needs; no expression templates.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T{0});
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<int>;
using RationalMatrix = Matrix<Rational>;

/// Exact Gauss-Jordan inverse. Throws std::domain_error if singular.
RationalMatrix invert(const RationalMatrix& m);

RationalMatrix to_rational(const IntMatrix& m);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace catsys
