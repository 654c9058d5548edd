#include "antitrid/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "antitrid/errors.hpp"

namespace antitrid {

DenseMatrix::DenseMatrix(int n)
    : n_(n),
      entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
  if (n < 1) throw InvalidDimension("DenseMatrix: n must be positive");
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix exchange_matrix(int n) {
  if (n < 1) throw InvalidDimension("exchange_matrix: n must be positive");
  DenseMatrix j(n);
  for (int i = 0; i < n; ++i) j(i, n - 1 - i) = 1.0;
  return j;
}

DenseMatrix flip_rows(const DenseMatrix& m) {
  const int n = m.size();
  DenseMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = m(n - 1 - i, j);
  return out;
}

bool is_centrosymmetric(const DenseMatrix& m, double tol) {
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(m(i, j) - m(n - 1 - i, n - 1 - j)) > tol) return false;
  return true;
}

double max_abs(const DenseMatrix& m) {
  double best = 0.0;
  for (const Complex& v : m.entries()) best = std::max(best, std::abs(v));
  return best;
}

double max_abs_diff(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.size() != y.size())
    throw DimensionMismatch("max_abs_diff: dimension mismatch");
  double best = 0.0;
  for (std::size_t k = 0; k < x.entries().size(); ++k)
    best = std::max(best, std::abs(x.entries()[k] - y.entries()[k]));
  return best;
}

}  // namespace antitrid
