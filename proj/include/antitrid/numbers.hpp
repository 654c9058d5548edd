#pragma once

#include <optional>
#include <string>

#include "antitrid/matrix.hpp"

namespace antitrid {

/// Exact signed 128-bit integer used for Fibonacci and Pell values.
using Int128 = __int128;

std::string int128_to_string(Int128 v);

/// Fibonacci polynomial F_m(x): F_0 = 0, F_1 = 1, F_m = x*F_{m-1} + F_{m-2}.
Complex fib_poly(int m, Complex x);

/// F_m exactly; m <= 180 (the last value that fits 128-bit signed).
Int128 fib_int(int m);

/// Pell number P_m = 2*P_{m-1} + P_{m-2} exactly; m <= 95.
Int128 pell_int(int m);

/// Determinant of the n x n exchange matrix: +1 for n = 0, 1 (mod 4),
/// -1 for n = 2, 3 (mod 4); equals (-1)^floor(n/2).
int sign_J(int n);

/// Closed form for det of the family-A matrix at (a, b) = (x, i):
/// sign_J(n) * (x^2 + 4) * F_{n-1}(x).
Complex det_identity_A(int n, Complex x);

/// prod_{k=1..n} (x + 2i*cos((k-1)pi/(n-1))) / (x^2 + 4); equals
/// F_{n-1}(x). Throws DomainError within 1e-12 of x = +-2i.
Complex fib_poly_product(int n, Complex x);

enum class BVariant { Fib, Pell };

/// Closed form for det of the family-B matrix: sign_J(n)*(1+2i)*F_n at
/// (a, b) = (1, i), or sign_J(n)*(2+2i)*P_n at (2, i).
Complex det_identity_B(int n, BVariant variant);

/// Determinant of the family-B companion matrix by Laplace expansion along
/// the first and last two rows:
/// (a+b)^2 D_{n-2} - 2 b^2 (a+b) D_{n-3} + b^4 D_{n-4},
/// with D_m = tridiag_det(m, b, a, b). Requires n >= 4.
Complex laplace_expansion_B(int n, Complex a, Complex b);

enum class IdentityKind {
  DetA_FibPoly,
  FibPolyProduct,
  DetB_Fib,
  DetB_Pell,
  FibProduct,
  PellProduct,
  LaplaceB,
};

const char* identity_name(IdentityKind kind);
double default_rel_tol(IdentityKind kind);

/// One verified identity instance: exact side vs complex product/matrix side.
struct FactorizationReport {
  IdentityKind identity = IdentityKind::FibProduct;
  int n = 0;
  std::optional<Complex> x;
  Complex exact_value;     // exact side, promoted to complex
  std::string exact_text;  // decimal rendering when the exact side is integral
  Complex product_value;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  bool passed = false;
};

/// Residual bookkeeping shared by every identity. passed requires
/// |product - exact| <= rel_tol*|exact| + 1e-10, and additionally a vanishing
/// imaginary part (relative to the exact magnitude) when the exact side is
/// real.
FactorizationReport make_report(IdentityKind kind, int n,
                                std::optional<Complex> x, Complex exact,
                                std::string exact_text, Complex product,
                                double rel_tol);

/// prod_{k=2..n} (1 + 2i*cos((k-1)pi/n)) compared against F_n.
FactorizationReport fib_product(int n, double rel_tol = 1e-9);

/// prod_{k=2..n} (2 + 2i*cos((k-1)pi/n)) compared against P_n.
FactorizationReport pell_product(int n, double rel_tol = 1e-8);

}  // namespace antitrid
