#pragma once

#include "antitrid/matrix.hpp"

namespace antitrid {

/// Packed LU factors with partial pivoting: P*A = L*U, L unit lower.
struct LuFactorization {
  int n = 0;
  std::vector<Complex> lu;  // row-major; L strictly below the diagonal
  std::vector<int> perm;    // perm[k] = source row of pivoted row k
  int sign = 1;             // parity of the pivot permutation
};

DenseMatrix mat_mul(const DenseMatrix& x, const DenseMatrix& y);

/// M^r by binary exponentiation, r >= 0; r = 0 gives the identity.
DenseMatrix mat_power(const DenseMatrix& m, long long r);

LuFactorization lu_factor(const DenseMatrix& m);

/// Determinant from the LU pivots; 0 when elimination hits an empty column.
Complex lu_det(const DenseMatrix& m);

/// Inverse by LU solves against unit vectors. Throws SingularMatrix when a
/// pivot underflows or the pivot-ratio condition heuristic trips.
DenseMatrix lu_inverse(const DenseMatrix& m);

/// Determinant of the m x m tridiagonal matrix with constant bands, by the
/// three-term recurrence D_m = diag*D_{m-1} - sub*sup*D_{m-2}, D_0 = 1,
/// D_{-1} = 0 (so m = 0 returns 1).
Complex tridiag_det(int m, Complex sub, Complex diag, Complex sup);

}  // namespace antitrid
