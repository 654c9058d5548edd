#pragma once

namespace antitrid {

/// Chebyshev degree stored as twice its value, so half-integer degrees such
/// as (2j-1)/2 are represented exactly: integer degrees are even values,
/// half-integer degrees odd values.
class DoubledDegree {
 public:
  explicit DoubledDegree(int twice_s);

  static DoubledDegree integer(int s) { return DoubledDegree(2 * s); }

  int twice() const { return twice_; }
  bool is_integer() const { return twice_ % 2 == 0; }

 private:
  int twice_;
};

/// T_s(cos theta) = cos(s * theta) for theta in [0, pi].
/// Integer degrees are exact at the endpoints: 1 at theta = 0 and (-1)^s at
/// theta = pi, with no trig rounding.
double cheb_at_angle(DoubledDegree deg, double theta);

/// T_s(x) = cos(s * arccos x) for |x| <= 1 (1e-12 slack, then clamped).
/// Test-oracle companion of cheb_at_angle; throws DomainError outside [-1, 1].
double cheb_at_node(DoubledDegree deg, double x);

}  // namespace antitrid
