#pragma once

#include <complex>
#include <vector>

namespace antitrid {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage, 0-based accessors.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(int n);

  static DenseMatrix identity(int n);

  int size() const { return n_; }

  Complex& operator()(int i, int j) { return entries_[index(i, j)]; }
  const Complex& operator()(int i, int j) const { return entries_[index(i, j)]; }

  std::vector<Complex>& entries() { return entries_; }
  const std::vector<Complex>& entries() const { return entries_; }

  bool operator==(const DenseMatrix& other) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<Complex> entries_;
};

/// Anti-identity permutation matrix (ones on the anti-diagonal).
DenseMatrix exchange_matrix(int n);

/// Row-reversed copy; equals exchange_matrix(n) * m.
DenseMatrix flip_rows(const DenseMatrix& m);

/// True iff m(i,j) and m(n-1-i,n-1-j) agree within tol for all entries.
bool is_centrosymmetric(const DenseMatrix& m, double tol);

double max_abs(const DenseMatrix& m);
double max_abs_diff(const DenseMatrix& x, const DenseMatrix& y);

}  // namespace antitrid
