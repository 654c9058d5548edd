#include "antitrid/numbers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "antitrid/errors.hpp"
#include "antitrid/oracle.hpp"

namespace antitrid {
namespace {

constexpr int kFibCap = 180;   // F_180 is the last Fibonacci number in Int128
constexpr int kPellCap = 95;   // P_95 is the last Pell number in Int128
constexpr Complex kImagUnit{0.0, 1.0};
constexpr double kReportAbsFloor = 1e-10;

Int128 linear_recurrence(int m, Int128 mult) {
  Int128 prev = 0;
  Int128 curr = 1;
  if (m == 0) return prev;
  for (int k = 2; k <= m; ++k) {
    const Int128 next = mult * curr + prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace

std::string int128_to_string(Int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v)
                                 : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Complex fib_poly(int m, Complex x) {
  if (m < 0) throw DomainError("fib_poly: m must be >= 0");
  Complex prev{0.0, 0.0};
  Complex curr{1.0, 0.0};
  if (m == 0) return prev;
  for (int k = 2; k <= m; ++k) {
    const Complex next = x * curr + prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

Int128 fib_int(int m) {
  if (m < 0) throw DomainError("fib_int: m must be >= 0");
  if (m > kFibCap)
    throw OverflowExactInteger("fib_int: m > 180 overflows exact arithmetic");
  return linear_recurrence(m, 1);
}

Int128 pell_int(int m) {
  if (m < 0) throw DomainError("pell_int: m must be >= 0");
  if (m > kPellCap)
    throw OverflowExactInteger("pell_int: m > 95 overflows exact arithmetic");
  return linear_recurrence(m, 2);
}

int sign_J(int n) {
  if (n < 1) throw InvalidDimension("sign_J: n must be positive");
  const int mod = n % 4;
  return mod == 0 || mod == 1 ? 1 : -1;
}

Complex det_identity_A(int n, Complex x) {
  if (n < 3) throw InvalidDimension("det_identity_A: n must be >= 3");
  return static_cast<double>(sign_J(n)) * (x * x + 4.0) * fib_poly(n - 1, x);
}

Complex fib_poly_product(int n, Complex x) {
  if (n < 3) throw InvalidDimension("fib_poly_product: n must be >= 3");
  if (std::abs(x - 2.0 * kImagUnit) <= 1e-12 ||
      std::abs(x + 2.0 * kImagUnit) <= 1e-12)
    throw DomainError("fib_poly_product: x^2 + 4 vanishes at x = +-2i");
  Complex prod{1.0, 0.0};
  for (int k = 1; k <= n; ++k) {
    const double theta =
        std::numbers::pi *
        (static_cast<double>(k - 1) / static_cast<double>(n - 1));
    prod *= x + 2.0 * kImagUnit * std::cos(theta);
  }
  return prod / (x * x + 4.0);
}

Complex det_identity_B(int n, BVariant variant) {
  if (n < 2) throw InvalidDimension("det_identity_B: n must be >= 2");
  const double sign = static_cast<double>(sign_J(n));
  if (variant == BVariant::Fib)
    return sign * Complex{1.0, 2.0} * static_cast<double>(fib_int(n));
  return sign * Complex{2.0, 2.0} * static_cast<double>(pell_int(n));
}

Complex laplace_expansion_B(int n, Complex a, Complex b) {
  if (n < 4) throw InvalidDimension("laplace_expansion_B: n must be >= 4");
  if (b.real() == 0.0 && b.imag() == 0.0)
    throw ZeroOffDiagonal("laplace_expansion_B: b must be nonzero");
  const Complex d2 = tridiag_det(n - 2, b, a, b);
  const Complex d3 = tridiag_det(n - 3, b, a, b);
  const Complex d4 = tridiag_det(n - 4, b, a, b);
  const Complex ab = a + b;
  return ab * ab * d2 - 2.0 * b * b * ab * d3 + b * b * b * b * d4;
}

const char* identity_name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::DetA_FibPoly:
      return "detA";
    case IdentityKind::FibPolyProduct:
      return "fibpoly";
    case IdentityKind::DetB_Fib:
      return "detB-fib";
    case IdentityKind::DetB_Pell:
      return "detB-pell";
    case IdentityKind::FibProduct:
      return "fib";
    case IdentityKind::PellProduct:
      return "pell";
    case IdentityKind::LaplaceB:
      return "laplaceB";
  }
  return "unknown";
}

double default_rel_tol(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::FibProduct:
      return 1e-9;
    case IdentityKind::LaplaceB:
      return 1e-9;
    case IdentityKind::DetA_FibPoly:
    case IdentityKind::FibPolyProduct:
    case IdentityKind::DetB_Fib:
    case IdentityKind::DetB_Pell:
    case IdentityKind::PellProduct:
      return 1e-8;
  }
  return 1e-8;
}

FactorizationReport make_report(IdentityKind kind, int n,
                                std::optional<Complex> x, Complex exact,
                                std::string exact_text, Complex product,
                                double rel_tol) {
  FactorizationReport rep;
  rep.identity = kind;
  rep.n = n;
  rep.x = x;
  rep.exact_value = exact;
  rep.exact_text = std::move(exact_text);
  rep.product_value = product;
  rep.abs_residual = std::abs(product - exact);
  const double scale = std::abs(exact);
  rep.rel_residual = scale > 0.0 ? rep.abs_residual / scale : rep.abs_residual;
  bool ok = rep.abs_residual <= rel_tol * scale + kReportAbsFloor;
  if (exact.imag() == 0.0)
    ok = ok && std::abs(product.imag()) <= rel_tol * std::max(scale, 1.0);
  rep.passed = ok;
  return rep;
}

FactorizationReport fib_product(int n, double rel_tol) {
  if (n < 2) throw InvalidDimension("fib_product: n must be >= 2");
  const Int128 exact = fib_int(n);
  Complex prod{1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double theta = std::numbers::pi * (static_cast<double>(k - 1) /
                                             static_cast<double>(n));
    prod *= 1.0 + 2.0 * kImagUnit * std::cos(theta);
  }
  return make_report(IdentityKind::FibProduct, n, std::nullopt,
                     Complex{static_cast<double>(exact), 0.0},
                     int128_to_string(exact), prod, rel_tol);
}

FactorizationReport pell_product(int n, double rel_tol) {
  if (n < 2) throw InvalidDimension("pell_product: n must be >= 2");
  const Int128 exact = pell_int(n);
  Complex prod{1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double theta = std::numbers::pi * (static_cast<double>(k - 1) /
                                             static_cast<double>(n));
    prod *= 2.0 + 2.0 * kImagUnit * std::cos(theta);
  }
  return make_report(IdentityKind::PellProduct, n, std::nullopt,
                     Complex{static_cast<double>(exact), 0.0},
                     int128_to_string(exact), prod, rel_tol);
}

}  // namespace antitrid
