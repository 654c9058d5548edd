#include "antitrid/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "antitrid/errors.hpp"

namespace antitrid {

DoubledDegree::DoubledDegree(int twice_s) : twice_(twice_s) {
  if (twice_s < 0) throw DomainError("DoubledDegree: degree must be >= 0");
}

double cheb_at_angle(DoubledDegree deg, double theta) {
  if (theta == 0.0) return 1.0;
  if (theta == std::numbers::pi && deg.is_integer()) {
    // keep cos(s*pi) = (-1)^s exact instead of trusting libm near +-1
    return (deg.twice() / 2) % 2 == 0 ? 1.0 : -1.0;
  }
  return std::cos(0.5 * deg.twice() * theta);
}

double cheb_at_node(DoubledDegree deg, double x) {
  constexpr double slack = 1e-12;
  if (std::abs(x) > 1.0 + slack)
    throw DomainError("cheb_at_node: |x| > 1");
  return cheb_at_angle(deg, std::acos(std::clamp(x, -1.0, 1.0)));
}

}  // namespace antitrid
