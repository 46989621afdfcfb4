#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "covidmc/matrix.hpp"

namespace covidmc {

/// splitmix64: the documented deterministic generator behind all simulation.
/// One call advances the state by the 64-bit golden ratio and returns the
/// finalized value; next_double() maps the top 53 bits to [0,1).
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/// Seed of trajectory k in a cohort: the splitmix64 finalizer applied to
/// base_seed + (k+1) * golden ratio. Stable across versions and platforms.
std::uint64_t trajectory_seed(std::uint64_t base_seed, std::uint64_t index);

/// Day-stepped realization of the chain; states[0] is the start state.
struct Trajectory {
  std::vector<State> states;
};

/// Draws `horizon` transitions by inverse CDF over the current row, scanning
/// states in canonical order with exact cumulative row values. Identical
/// inputs give identical output on every platform.
Trajectory simulate_trajectory(const StochasticMatrix& p, State start,
                               int horizon, std::uint64_t seed);

/// Per-day state occupancy counts over n independent trajectories.
struct CohortResult {
  State start = State::S;
  int horizon = 0;
  long long n_trajectories = 0;
  std::vector<std::array<long long, 6>> occupancy;  // [day][state]
};

/// Trajectory k uses trajectory_seed(base_seed, k); aggregation is plain
/// integer counting, so the result is independent of evaluation order.
/// Requires n >= 1.
CohortResult simulate_cohort(const StochasticMatrix& p, State start,
                             int horizon, long long n,
                             std::uint64_t base_seed);

struct CellComparison {
  double analytic = 0;
  double empirical = 0;
  double z = 0;
  bool skipped = false;  // analytic mass below 1e-12
};

using ComparisonTable = std::vector<std::array<CellComparison, 6>>;

/// z = (freq - analytic) / sqrt(analytic*(1-analytic)/n) per day and state,
/// with the analytic value from evolve(point mass, p, day). Cells with
/// analytic mass below 1e-12 are skipped and flagged.
ComparisonTable compare_empirical_analytic(const CohortResult& result,
                                           const StochasticMatrix& p);

}  // namespace covidmc
