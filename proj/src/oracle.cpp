#include "antitrid/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "antitrid/errors.hpp"

namespace antitrid {

DenseMatrix mat_mul(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.size() != y.size())
    throw DimensionMismatch("mat_mul: dimension mismatch");
  const int n = x.size();
  DenseMatrix out(n);
  for (int i = 0; i < n; ++i) {
    // i-k-j order keeps the inner loop contiguous
    for (int k = 0; k < n; ++k) {
      const Complex xik = x(i, k);
      for (int j = 0; j < n; ++j) out(i, j) += xik * y(k, j);
    }
  }
  return out;
}

DenseMatrix mat_power(const DenseMatrix& m, long long r) {
  if (r < 0) throw DomainError("mat_power: r must be >= 0");
  DenseMatrix result = DenseMatrix::identity(m.size());
  DenseMatrix base = m;
  long long e = r;
  while (e > 0) {
    if (e & 1) result = mat_mul(result, base);
    e >>= 1;
    if (e > 0) base = mat_mul(base, base);
  }
  return result;
}

LuFactorization lu_factor(const DenseMatrix& m) {
  const int n = m.size();
  LuFactorization f;
  f.n = n;
  f.lu = m.entries();
  f.perm.resize(n);
  for (int i = 0; i < n; ++i) f.perm[i] = i;
  f.sign = 1;

  auto at = [&](int i, int j) -> Complex& {
    return f.lu[static_cast<std::size_t>(i) * n + j];
  };

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(at(col, col));
    for (int row = col + 1; row < n; ++row) {
      const double mag = std::abs(at(row, col));
      if (mag > best) {
        best = mag;
        pivot = row;
      }
    }
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(at(col, j), at(pivot, j));
      std::swap(f.perm[col], f.perm[pivot]);
      f.sign = -f.sign;
    }
    const Complex p = at(col, col);
    if (p == Complex{}) continue;  // column already zero below the diagonal
    for (int row = col + 1; row < n; ++row) {
      const Complex factor = at(row, col) / p;
      at(row, col) = factor;
      if (factor == Complex{}) continue;
      for (int j = col + 1; j < n; ++j) at(row, j) -= factor * at(col, j);
    }
  }
  return f;
}

Complex lu_det(const DenseMatrix& m) {
  const LuFactorization f = lu_factor(m);
  Complex det{static_cast<double>(f.sign), 0.0};
  for (int i = 0; i < f.n; ++i)
    det *= f.lu[static_cast<std::size_t>(i) * f.n + i];
  return det;
}

DenseMatrix lu_inverse(const DenseMatrix& m) {
  const int n = m.size();
  const LuFactorization f = lu_factor(m);
  auto at = [&](int i, int j) -> const Complex& {
    return f.lu[static_cast<std::size_t>(i) * n + j];
  };

  double piv_min = std::numeric_limits<double>::infinity();
  double piv_max = 0.0;
  for (int i = 0; i < n; ++i) {
    const double mag = std::abs(at(i, i));
    piv_min = std::min(piv_min, mag);
    piv_max = std::max(piv_max, mag);
  }
  if (piv_min < 1e-300 || piv_min <= 1e-14 * piv_max)
    throw SingularMatrix("lu_inverse: matrix is singular to working precision");

  DenseMatrix inv(n);
  std::vector<Complex> x(n);
  for (int col = 0; col < n; ++col) {
    for (int i = 0; i < n; ++i) {
      Complex s = f.perm[i] == col ? Complex{1.0, 0.0} : Complex{};
      for (int k = 0; k < i; ++k) s -= at(i, k) * x[k];
      x[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
      Complex s = x[i];
      for (int k = i + 1; k < n; ++k) s -= at(i, k) * x[k];
      x[i] = s / at(i, i);
    }
    for (int i = 0; i < n; ++i) inv(i, col) = x[i];
  }
  return inv;
}

Complex tridiag_det(int m, Complex sub, Complex diag, Complex sup) {
  if (m < 0) throw DomainError("tridiag_det: m must be >= 0");
  Complex prev{0.0, 0.0};  // D_{-1}
  Complex curr{1.0, 0.0};  // D_0
  for (int k = 1; k <= m; ++k) {
    const Complex next = diag * curr - sub * sup * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace antitrid
