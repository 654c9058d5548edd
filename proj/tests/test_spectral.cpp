#include <algorithm>
#include <cmath>
#include <vector>

#include "antitrid/builders.hpp"
#include "antitrid/errors.hpp"
#include "antitrid/oracle.hpp"
#include "antitrid/spectral.hpp"
#include "antitrid/verify.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace antitrid;
using testutil::from_rows;

namespace {

const Complex kI{0.0, 1.0};

// golden 3x3 values, checked against the brute-force oracle in test_oracle
const DenseMatrix kTilde3Cubed =
    from_rows({{55, 234, 54}, {117, 109, 117}, {54, 234, 55}});
const DenseMatrix kA3Cubed =
    from_rows({{54, 234, 55}, {117, 109, 117}, {55, 234, 54}});

std::vector<AntiTridiagSpec> pool_specs(int max_n) {
  std::vector<AntiTridiagSpec> specs;
  for (Family family : {Family::A, Family::B})
    for (int n = min_dimension(family); n <= max_n; ++n)
      for (const Complex& a : sweep_pool_a())
        for (const Complex& b : sweep_pool_b())
          specs.push_back(make_spec(family, n, a, b));
  return specs;
}

}  // namespace

TEST_CASE("spectrum structure invariants") {
  for (const AntiTridiagSpec& spec : pool_specs(9)) {
    const SpectralData sd = spectrum(spec);
    REQUIRE(sd.n == spec.n);
    for (int k = 0; k + 1 < sd.n; ++k) CHECK(sd.angles[k] < sd.angles[k + 1]);
    CHECK(sd.angles.front() == 0.0);
    for (int k = 0; k < sd.n; ++k) {
      CHECK(std::abs(sd.nodes[k]) <= 1.0);
      CHECK(std::abs(sd.eigenvalues[k] - (spec.a + 2.0 * spec.b * sd.nodes[k])) ==
            0.0);
    }
    std::vector<bool> seen(sd.n, false);
    for (int slot = 0; slot < sd.n; ++slot) {
      REQUIRE(sd.paper_order[slot] >= 0);
      REQUIRE(sd.paper_order[slot] < sd.n);
      CHECK_FALSE(seen[sd.paper_order[slot]]);
      seen[sd.paper_order[slot]] = true;
    }
    if (spec.family == Family::A) {
      CHECK(sd.paper_order[1] == 0);
      CHECK(sd.paper_order[2] == sd.n - 1);
      CHECK(sd.weights.empty());
    } else {
      CHECK(sd.weights[0] == 1.0 / sd.n);
      double sum = 0.0;
      for (double w : sd.weights) sum += w;
      CHECK(std::abs(sum - (2.0 * sd.n - 1.0) / sd.n) <= 1e-14);
    }
  }
}

TEST_CASE("spectrum worked examples") {
  const SpectralData a3 = spectrum(make_spec(Family::A, 3, 1.0, 3.0));
  // formula-slot order (1, 7, -5): interior first, then angle 0, then angle pi
  CHECK(std::abs(a3.eigenvalues[a3.paper_order[0]] - Complex{1, 0}) <= 1e-14);
  CHECK(std::abs(a3.eigenvalues[a3.paper_order[1]] - Complex{7, 0}) <= 1e-14);
  CHECK(std::abs(a3.eigenvalues[a3.paper_order[2]] - Complex{-5, 0}) <= 1e-14);

  const SpectralData a5 = spectrum(make_spec(Family::A, 5, 1.0, 3.0));
  std::vector<double> reals;
  for (const Complex& v : a5.eigenvalues) reals.push_back(v.real());
  std::sort(reals.begin(), reals.end());
  const double rt = 3.0 * std::sqrt(2.0);
  const std::vector<double> expected{-5.0, 1.0 - rt, 1.0, 1.0 + rt, 7.0};
  for (std::size_t k = 0; k < expected.size(); ++k)
    CHECK(std::abs(reals[k] - expected[k]) <= 1e-12);

  const SpectralData b2 = spectrum(make_spec(Family::B, 2, 1.0, kI));
  CHECK(std::abs(b2.eigenvalues[0] - Complex{1, 2}) <= 1e-14);
  CHECK(std::abs(b2.eigenvalues[1] - Complex{1, 0}) <= 1e-14);
  CHECK(b2.weights[0] == 0.5);
  CHECK(b2.weights[1] == 1.0);
}

TEST_CASE("tilde_power_entry golden values") {
  const AntiTridiagSpec a3 = make_spec(Family::A, 3, 1.0, 3.0);
  const SpectralData sd = spectrum(a3);
  CHECK(std::abs(tilde_power_entry(a3, sd, 1, 1, 3) - Complex{55, 0}) <= 1e-9);
  CHECK(std::abs(tilde_power_entry(a3, sd, 2, 2, 3) - Complex{109, 0}) <= 1e-9);
  CHECK(std::abs(tilde_power_entry(a3, sd, 3, 1, 3) - Complex{54, 0}) <= 1e-9);

  const AntiTridiagSpec b2 = make_spec(Family::B, 2, 1.0, 1.0);
  const SpectralData sdb = spectrum(b2);
  CHECK(std::abs(tilde_power_entry(b2, sdb, 1, 2, 1) - Complex{1, 0}) <= 1e-12);

  CHECK_THROWS_AS(tilde_power_entry(a3, sd, 0, 1, 1), DomainError);
  CHECK_THROWS_AS(tilde_power_entry(a3, sd, 1, 4, 1), DomainError);
}

TEST_CASE("first power reproduces the builders") {
  for (const AntiTridiagSpec& spec : pool_specs(8)) {
    const double scale = std::max(1.0, max_abs(build_tilde(spec)));
    CHECK(max_abs_diff(closed_power_tilde(spec, 1), build_tilde(spec)) <=
          1e-12 * scale);
    CHECK(max_abs_diff(closed_power(spec, 1), build_anti(spec)) <=
          1e-12 * scale);
  }
}

TEST_CASE("closed_power golden 3x3 and zeroth power") {
  const AntiTridiagSpec a3 = make_spec(Family::A, 3, 1.0, 3.0);
  CHECK(max_abs_diff(closed_power_tilde(a3, 3), kTilde3Cubed) <= 1e-9);
  CHECK(max_abs_diff(closed_power(a3, 3), kA3Cubed) <= 1e-9);

  for (const AntiTridiagSpec& spec :
       {make_spec(Family::A, 6, Complex{1, 1}, kI),
        make_spec(Family::B, 5, Complex{0.3, -0.7}, Complex{1, -1})})
    CHECK(max_abs_diff(closed_power(spec, 0),
                       DenseMatrix::identity(spec.n)) <= 1e-12);
}

TEST_CASE("even power of the 5x5 equals the companion power, unflipped") {
  // even exponents leave the exchange flip off; the flipped variant differs
  const AntiTridiagSpec a5 = make_spec(Family::A, 5, 1.0, 3.0);
  const DenseMatrix closed = closed_power(a5, 4);
  const DenseMatrix oracle = mat_power(build_anti(a5), 4);
  CHECK(max_abs_diff(closed, oracle) <= 1e-9);
  CHECK(closed(0, 0).real() == doctest::Approx(595.0).epsilon(1e-12));
  CHECK(max_abs_diff(closed, closed_power_tilde(a5, 4)) == 0.0);
}

TEST_CASE("table assembly equals the per-entry formula bit for bit") {
  for (const AntiTridiagSpec& spec :
       {make_spec(Family::A, 7, Complex{1, 1}, Complex{1, -1}),
        make_spec(Family::A, 3, 1.0, 3.0),
        make_spec(Family::B, 6, Complex{0.3, -0.7}, 3.0),
        make_spec(Family::B, 2, 1.0, kI)}) {
    const SpectralData sd = spectrum(spec);
    for (long long r : {0LL, 1LL, 3LL}) {
      const DenseMatrix m = closed_power_tilde(spec, r);
      for (int i = 1; i <= spec.n; ++i)
        for (int j = 1; j <= spec.n; ++j)
          CHECK(m(i - 1, j - 1) == tilde_power_entry(spec, sd, i, j, r));
    }
  }
}

TEST_CASE("parity: odd powers are the flipped companion powers") {
  for (const AntiTridiagSpec& spec : pool_specs(7)) {
    for (long long r : {1LL, 3LL, 5LL})
      CHECK(max_abs_diff(closed_power(spec, r),
                         flip_rows(closed_power_tilde(spec, r))) == 0.0);
    for (long long r : {0LL, 2LL, 4LL})
      CHECK(max_abs_diff(closed_power(spec, r), closed_power_tilde(spec, r)) ==
            0.0);
  }
}

TEST_CASE("companion powers stay centrosymmetric") {
  for (const AntiTridiagSpec& spec : pool_specs(9)) {
    for (long long r : {2LL, 3LL, 5LL}) {
      const DenseMatrix u = closed_power_tilde(spec, r);
      CHECK(is_centrosymmetric(u, 1e-9 * std::max(1.0, max_abs(u))));
    }
  }
}

TEST_CASE("semigroup law on closed powers") {
  for (const AntiTridiagSpec& spec :
       {make_spec(Family::A, 5, 1.0, 3.0),
        make_spec(Family::A, 8, Complex{1, 1}, Complex{1, -1}),
        make_spec(Family::B, 2, 1.0, 1.0),
        make_spec(Family::B, 9, Complex{0.3, -0.7}, kI)}) {
    for (long long r : {1LL, 2LL, 3LL}) {
      for (long long s : {1LL, 2LL, 3LL}) {
        const DenseMatrix lhs =
            mat_mul(closed_power(spec, r), closed_power(spec, s));
        const DenseMatrix rhs = closed_power(spec, r + s);
        CHECK(max_abs_diff(lhs, rhs) <= 1e-7 * std::max(1.0, max_abs(rhs)));
      }
    }
  }
}

TEST_CASE("negative powers invert the matrix") {
  for (const AntiTridiagSpec& spec :
       {make_spec(Family::A, 5, 1.0, 3.0),
        make_spec(Family::B, 6, Complex{1, 1}, Complex{1, -1})}) {
    const DenseMatrix inv = closed_power(spec, -1);
    CHECK(max_abs_diff(mat_mul(inv, build_anti(spec)),
                       DenseMatrix::identity(spec.n)) <= 1e-7);
    // (A^-2) * A^2 = I as well
    CHECK(max_abs_diff(mat_mul(closed_power(spec, -2), closed_power(spec, 2)),
                       DenseMatrix::identity(spec.n)) <= 1e-7);
  }
}

TEST_CASE("singular spectra refuse negative powers") {
  // a = 0 puts the interior angle pi/2 eigenvalue of the 3x3 at zero
  const AntiTridiagSpec spec = make_spec(Family::A, 3, 0.0, 1.0);
  CHECK_FALSE(spectrum_invertible(spectrum(spec)));
  CHECK_THROWS_AS(closed_power(spec, -1), SingularSpectrum);
  CHECK_NOTHROW(closed_power(spec, 2));
}

TEST_CASE("scalar_power") {
  CHECK(scalar_power(Complex{3, 0}, 0) == Complex{1, 0});
  CHECK(scalar_power(Complex{0, 1}, 2) == Complex{-1, 0});
  CHECK(std::abs(scalar_power(Complex{2, 0}, -3) - Complex{0.125, 0}) <=
        1e-15);
  CHECK(std::abs(scalar_power(Complex{1, 1}, 4) - Complex{-4, 0}) <= 1e-12);
}

TEST_CASE("eigenvalues_anti worked examples") {
  const std::vector<Complex> a3 =
      eigenvalues_anti(make_spec(Family::A, 3, 1.0, 3.0));
  REQUIRE(a3.size() == 3);
  CHECK(std::abs(a3[0] - Complex{7, 0}) <= 1e-12);
  CHECK(std::abs(a3[1] - Complex{-1, 0}) <= 1e-12);
  CHECK(std::abs(a3[2] - Complex{-5, 0}) <= 1e-12);

  // even n flips the family-A pattern: characteristic polynomial of the
  // 4x4 anti build has roots {-7, 4, 2, -5} (trace -2b = -6, det 280)
  const std::vector<Complex> a4 =
      eigenvalues_anti(make_spec(Family::A, 4, 1.0, 3.0));
  REQUIRE(a4.size() == 4);
  CHECK(std::abs(a4[0] - Complex{-7, 0}) <= 1e-12);
  CHECK(std::abs(a4[1] - Complex{4, 0}) <= 1e-12);
  CHECK(std::abs(a4[2] - Complex{2, 0}) <= 1e-12);
  CHECK(std::abs(a4[3] - Complex{-5, 0}) <= 1e-12);

  const std::vector<Complex> b2 =
      eigenvalues_anti(make_spec(Family::B, 2, 1.0, kI));
  CHECK(std::abs(b2[0] - Complex{1, 2}) <= 1e-12);
  CHECK(std::abs(b2[1] - Complex{-1, 0}) <= 1e-12);

  // the first eigenvalue is always a + 2b for family B
  const AntiTridiagSpec b7 = make_spec(Family::B, 7, Complex{0.3, -0.7}, kI);
  CHECK(std::abs(eigenvalues_anti(b7)[0] - (b7.a + 2.0 * b7.b)) == 0.0);
}

TEST_CASE("eigenvalues_anti satisfy determinant residuals") {
  for (const AntiTridiagSpec& spec : pool_specs(9)) {
    const DenseMatrix anti = build_anti(spec);
    const std::vector<Complex> mus = eigenvalues_anti(spec);
    const double bound =
        1e-6 * std::pow(2.0 * (std::abs(spec.a) + 2.0 * std::abs(spec.b)),
                        spec.n);
    Complex prod{1.0, 0.0};
    for (const Complex& mu : mus) {
      DenseMatrix shifted = anti;
      for (int i = 0; i < spec.n; ++i) shifted(i, i) -= mu;
      CHECK(std::abs(lu_det(shifted)) <= bound);
      prod *= mu;
    }
    const Complex det = lu_det(anti);
    const double denom = std::max(std::abs(det), std::abs(prod));
    if (denom > 1e-9 * std::pow(std::abs(spec.a) + 2.0 * std::abs(spec.b),
                                spec.n))
      CHECK(std::abs(prod - det) <= 1e-7 * denom);
  }
}

TEST_CASE("closed powers match the oracle over the whole parameter grid") {
  for (const AntiTridiagSpec& spec : pool_specs(20))
    for (long long r = 0; r <= 5; ++r)
      CHECK(power_deviation(spec, r) <= 1e-8);
}

TEST_CASE("seeded oracle sweep stays within tolerance") {
  const SweepResult result = oracle_sweep(99, 60, 10, 1e-8, 1e-7);
  CHECK(result.all_ok);
  REQUIRE(result.records.size() == 70);
  CHECK(result.max_deviation <= 1e-8);
  // same seed, same records
  const SweepResult again = oracle_sweep(99, 60, 10, 1e-8, 1e-7);
  CHECK(again.max_deviation == result.max_deviation);
  CHECK(again.worst_index == result.worst_index);
}
