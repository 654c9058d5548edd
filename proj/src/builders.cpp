#include "antitrid/builders.hpp"

#include <cmath>
#include <string>

#include "antitrid/errors.hpp"

namespace antitrid {

int min_dimension(Family family) { return family == Family::A ? 3 : 2; }

AntiTridiagSpec make_spec(Family family, int n, Complex a, Complex b) {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
      !std::isfinite(b.real()) || !std::isfinite(b.imag()))
    throw DomainError("make_spec: a and b must be finite");
  if (b.real() == 0.0 && b.imag() == 0.0)
    throw ZeroOffDiagonal("make_spec: b must be nonzero");
  if (n < min_dimension(family))
    throw InvalidDimension("make_spec: family " +
                           std::string(family == Family::A ? "A" : "B") +
                           " needs n >= " +
                           std::to_string(min_dimension(family)));
  return {family, n, a, b};
}

DenseMatrix build_tilde(const AntiTridiagSpec& spec) {
  const int n = spec.n;
  const Complex a = spec.a;
  const Complex b = spec.b;
  DenseMatrix m(n);
  if (spec.family == Family::A) {
    for (int i = 0; i < n; ++i) {
      m(i, i) = a;
      if (i + 1 < n) {
        m(i, i + 1) = -b;
        m(i + 1, i) = -b;
      }
    }
    // the four boundary rules override the -b band
    m(0, 1) = 2.0 * b;
    m(n - 1, n - 2) = 2.0 * b;
    m(1, 0) = b;
    m(n - 2, n - 1) = b;
  } else {
    for (int i = 0; i < n; ++i) {
      m(i, i) = a;
      if (i + 1 < n) {
        m(i, i + 1) = b;
        m(i + 1, i) = b;
      }
    }
    m(0, 0) = a + b;
    m(n - 1, n - 1) = a + b;
  }
  return m;
}

DenseMatrix build_anti(const AntiTridiagSpec& spec) {
  return flip_rows(build_tilde(spec));
}

}  // namespace antitrid
