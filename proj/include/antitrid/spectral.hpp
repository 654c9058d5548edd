#pragma once

#include <vector>

#include "antitrid/builders.hpp"

namespace antitrid {

/// Eigen-structure of the tridiagonal companion matrix, in increasing-angle
/// order, plus the slot permutation used by the family-A entry formula.
///
/// Angles are theta_k = (k-1)*pi/(n-1) for family A and (k-1)*pi/n for
/// family B (1-based k); eigenvalues are a + 2b*cos(theta_k) and nodes are
/// cos(theta_k). Family B carries quadrature weights 1/n at the angle-0
/// eigenvalue and 2/n everywhere else; family A bakes its weights into the
/// entry formula instead. paper_order maps formula slot -> angle index
/// (0-based): for family A, slots 1 and 2 hold the extreme angles 0 and pi,
/// the remaining slots the interior angles in increasing order.
struct SpectralData {
  Family family = Family::A;
  int n = 0;
  std::vector<double> angles;
  std::vector<Complex> eigenvalues;
  std::vector<double> nodes;
  std::vector<double> weights;   // family B only; empty for family A
  std::vector<int> paper_order;  // identity for family B
};

SpectralData spectrum(const AntiTridiagSpec& spec);

/// base^r for integer r by binary exponentiation; negative r uses
/// (1/base)^|r|. No complex logarithm is involved.
Complex scalar_power(Complex base, long long r);

/// True when min |lambda_k| > 1e-10 * max |lambda_k|, i.e. negative powers
/// are safe to evaluate.
bool spectrum_invertible(const SpectralData& sd);

/// Entry (i, j) of the r-th power of the tridiagonal companion matrix;
/// i and j are 1-based. Throws SingularSpectrum for r < 0 on a spectrum
/// with an eigenvalue at (or numerically at) zero.
Complex tilde_power_entry(const AntiTridiagSpec& spec, const SpectralData& sd,
                          int i, int j, long long r);

/// The full r-th power of the tridiagonal companion matrix, assembled from
/// tilde_power_entry with the Chebyshev values tabulated once.
DenseMatrix closed_power_tilde(const AntiTridiagSpec& spec, long long r);

/// The r-th power of the anti-tridiagonal matrix: the companion power,
/// row-flipped when r is odd (the exchange factor survives odd powers only).
DenseMatrix closed_power(const AntiTridiagSpec& spec, long long r);

/// Eigenvalues of the anti-tridiagonal matrix in increasing-angle order:
/// sigma_k * (a + 2b*cos theta_k) with sigma_k = (-1)^(k-1) for family B
/// and (-1)^(n+k) for family A (the flip parity of the k-th eigenvector).
std::vector<Complex> eigenvalues_anti(const AntiTridiagSpec& spec);

}  // namespace antitrid
