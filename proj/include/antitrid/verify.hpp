#pragma once

#include <cstdint>
#include <vector>

#include "antitrid/builders.hpp"

namespace antitrid {

struct SweepRecord {
  Family family = Family::A;
  int n = 0;
  Complex a;
  Complex b;
  long long r = 0;
  double deviation = 0.0;  // max |closed - oracle| / max |oracle|
  bool ok = false;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  double max_deviation = 0.0;
  int worst_index = -1;
  bool all_ok = true;
};

/// Parameter pools for the sweep (values of a, respectively b).
const std::vector<Complex>& sweep_pool_a();
const std::vector<Complex>& sweep_pool_b();

/// Entrywise deviation of closed_power from the brute-force oracle,
/// normalized by the largest oracle entry. Negative r is checked against
/// binary-exponentiated powers of the oracle LU inverse.
double power_deviation(const AntiTridiagSpec& spec, long long r);

/// Deterministic seeded sweep: `trials` draws with r in [0, 5] checked at
/// `tol`, then `negative_trials` draws with r in {-1, -2} on invertible
/// spectra checked at `negative_tol`. Same seed, same records, bit for bit.
SweepResult oracle_sweep(std::uint64_t seed, int trials, int negative_trials,
                         double tol, double negative_tol);

}  // namespace antitrid
