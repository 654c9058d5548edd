#pragma once

#include "antitrid/matrix.hpp"

namespace antitrid {

enum class Family { A, B };

/// Validated parameters for one of the two anti-tridiagonal families.
/// Family A needs n >= 3, family B needs n >= 2; b must be nonzero.
struct AntiTridiagSpec {
  Family family;
  int n;
  Complex a;
  Complex b;
};

int min_dimension(Family family);

AntiTridiagSpec make_spec(Family family, int n, Complex a, Complex b);

/// Tridiagonal companion matrix for the given parameters.
///
/// Family A: corners a, first/last off-diagonal pairs 2b and b, every other
/// band entry -b. Family B: corners a+b, constant band b. Both are
/// centrosymmetric and commute with the exchange matrix.
DenseMatrix build_tilde(const AntiTridiagSpec& spec);

/// The anti-tridiagonal matrix itself: flip_rows(build_tilde(spec)).
DenseMatrix build_anti(const AntiTridiagSpec& spec);

}  // namespace antitrid
