#include "switchopt/linalg.hpp"

#include <utility>

namespace switchopt {

namespace {

// Row-reduces a copy of m; returns the pivot count and accumulates the
// determinant sign/product along the way.
std::size_t eliminate(std::vector<std::vector<Rational>>& rows, std::size_t cols, Rational* det) {
  const std::size_t n = rows.size();
  std::size_t pivot_row = 0;
  if (det)
    *det = 1;
  for (std::size_t col = 0; col < cols && pivot_row < n; ++col) {
    std::size_t sel = pivot_row;
    while (sel < n && rows[sel][col] == 0)
      ++sel;
    if (sel == n) {
      if (det)
        *det = 0;
      continue;
    }
    if (sel != pivot_row) {
      std::swap(rows[sel], rows[pivot_row]);
      if (det)
        *det = -*det;
    }
    Rational p = rows[pivot_row][col];
    if (det)
      *det *= p;
    for (auto& v : rows[pivot_row])
      v /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == pivot_row || rows[r][col] == 0)
        continue;
      Rational factor = rows[r][col];
      for (std::size_t c = col; c < rows[r].size(); ++c)
        rows[r][c] -= factor * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::vector<std::vector<Rational>> to_rows(const Matrix<Rational>& m, bool augment) {
  const std::size_t n = m.dim();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(augment ? 2 * n : n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      rows[i][j] = m(i, j);
    if (augment)
      rows[i][n + i] = 1;
  }
  return rows;
}

}  // namespace

Matrix<Rational> inverse(const Matrix<Rational>& m) {
  const std::size_t n = m.dim();
  auto rows = to_rows(m, true);
  if (eliminate(rows, n, nullptr) < n)
    throw NumericError("matrix is singular");
  Matrix<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = rows[i][n + j];
  return out;
}

Rational determinant(const Matrix<Rational>& m) {
  auto rows = to_rows(m, false);
  Rational det;
  if (eliminate(rows, m.dim(), &det) < m.dim())
    return 0;
  return det;
}

std::size_t rank(const Matrix<Rational>& m) {
  auto rows = to_rows(m, false);
  return eliminate(rows, m.dim(), nullptr);
}

namespace {

template <class T>
std::string format_any(std::span<const T> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

std::string format_vector(std::span<const Rational> v) { return format_any(v); }
std::string format_vector(std::span<const double> v) { return format_any(v); }

}  // namespace switchopt
