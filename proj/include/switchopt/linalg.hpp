#pragma once

#include "switchopt/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace switchopt {

template <Scalar T>
using Vector = std::vector<T>;

/// Dense square matrix, row-major.
template <Scalar T>
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()), data_() {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_)
        throw DimensionError("matrix initializer is not square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  std::size_t dim() const { return n_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }

  bool operator==(const Matrix&) const = default;

private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

template <Scalar T>
Vector<T> mat_vec(const Matrix<T>& m, const Vector<T>& x) {
  const std::size_t n = m.dim();
  if (x.size() != n)
    throw DimensionError("mat_vec: matrix is " + std::to_string(n) + "x" + std::to_string(n) +
                         " but vector has " + std::to_string(x.size()) + " entries");
  Vector<T> y(n, T(0));
  for (std::size_t r = 0; r < n; ++r) {
    T acc = 0;
    for (std::size_t c = 0; c < n; ++c)
      acc += m(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

template <Scalar T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.dim() != b.dim())
    throw DimensionError("mat_mul: dimension mismatch");
  const std::size_t n = a.dim();
  Matrix<T> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <Scalar T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      out(j, i) = a(i, j);
  return out;
}

template <Scalar T>
T dot(const Vector<T>& a, const Vector<T>& b) {
  if (a.size() != b.size())
    throw DimensionError("dot: length mismatch");
  T acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += a[i] * b[i];
  return acc;
}

/// Lexicographic strict order on equal-length vectors.
template <Scalar T>
bool lex_less(const Vector<T>& a, const Vector<T>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

template <Scalar T>
T max_abs(const Vector<T>& x) {
  T best = 0;
  for (const T& v : x) {
    T a = abs_value(v);
    if (a > best)
      best = a;
  }
  return best;
}

template <Scalar T>
T max_abs(const Matrix<T>& m) {
  T best = 0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (const T& v : m.row(r)) {
      T a = abs_value(v);
      if (a > best)
        best = a;
    }
  return best;
}

/// Exact Gauss-Jordan inverse. Throws NumericError on a singular matrix.
Matrix<Rational> inverse(const Matrix<Rational>& m);

Rational determinant(const Matrix<Rational>& m);

/// Rank by exact elimination.
std::size_t rank(const Matrix<Rational>& m);

template <Scalar T>
Matrix<T> convert_matrix(const Matrix<Rational>& m) {
  Matrix<T> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      out(i, j) = from_rational<T>(m(i, j));
  return out;
}

template <Scalar T>
Vector<T> convert_vector(const Vector<Rational>& v) {
  Vector<T> out;
  out.reserve(v.size());
  for (const auto& x : v)
    out.push_back(from_rational<T>(x));
  return out;
}

std::string format_vector(std::span<const Rational> v);
std::string format_vector(std::span<const double> v);

}  // namespace switchopt
