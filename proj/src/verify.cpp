#include "antitrid/verify.hpp"

#include <random>

#include "antitrid/errors.hpp"
#include "antitrid/oracle.hpp"
#include "antitrid/spectral.hpp"

namespace antitrid {

const std::vector<Complex>& sweep_pool_a() {
  static const std::vector<Complex> pool = {
      {1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0},  {0.0, -1.0},
      {1.0, 1.0}, {0.3, -0.7}, {2.0, 0.0}};
  return pool;
}

const std::vector<Complex>& sweep_pool_b() {
  static const std::vector<Complex> pool = {
      {1.0, 0.0}, {3.0, 0.0}, {0.0, 1.0}, {1.0, -1.0}};
  return pool;
}

double power_deviation(const AntiTridiagSpec& spec, long long r) {
  const DenseMatrix closed = closed_power(spec, r);
  const DenseMatrix reference =
      r >= 0 ? mat_power(build_anti(spec), r)
             : mat_power(lu_inverse(build_anti(spec)), -r);
  const double scale = max_abs(reference);
  const double diff = max_abs_diff(closed, reference);
  return scale > 0.0 ? diff / scale : diff;
}

SweepResult oracle_sweep(std::uint64_t seed, int trials, int negative_trials,
                         double tol, double negative_tol) {
  if (trials < 0 || negative_trials < 0)
    throw DomainError("oracle_sweep: trial counts must be >= 0");
  std::mt19937_64 rng(seed);
  const auto& pool_a = sweep_pool_a();
  const auto& pool_b = sweep_pool_b();

  auto draw_spec = [&](bool need_invertible) {
    for (;;) {
      const Family family = (rng() & 1u) != 0 ? Family::B : Family::A;
      const int lo = min_dimension(family);
      const int n = lo + static_cast<int>(rng() % (21 - lo));
      const Complex a = pool_a[rng() % pool_a.size()];
      const Complex b = pool_b[rng() % pool_b.size()];
      const AntiTridiagSpec spec = make_spec(family, n, a, b);
      if (!need_invertible || spectrum_invertible(spectrum(spec))) return spec;
    }
  };

  SweepResult result;
  result.records.reserve(static_cast<std::size_t>(trials + negative_trials));
  auto record = [&](const AntiTridiagSpec& spec, long long r, double limit) {
    SweepRecord rec;
    rec.family = spec.family;
    rec.n = spec.n;
    rec.a = spec.a;
    rec.b = spec.b;
    rec.r = r;
    rec.deviation = power_deviation(spec, r);
    rec.ok = rec.deviation <= limit;
    if (!rec.ok) result.all_ok = false;
    if (result.worst_index < 0 || rec.deviation > result.max_deviation) {
      result.max_deviation = rec.deviation;
      result.worst_index = static_cast<int>(result.records.size());
    }
    result.records.push_back(rec);
  };

  for (int t = 0; t < trials; ++t) {
    const AntiTridiagSpec spec = draw_spec(false);
    const long long r = static_cast<long long>(rng() % 6);
    record(spec, r, tol);
  }
  for (int t = 0; t < negative_trials; ++t) {
    const AntiTridiagSpec spec = draw_spec(true);
    const long long r = -static_cast<long long>(1 + rng() % 2);
    record(spec, r, negative_tol);
  }
  return result;
}

}  // namespace antitrid
