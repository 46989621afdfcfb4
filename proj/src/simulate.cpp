#include "covidmc/simulate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace covidmc {

std::uint64_t trajectory_seed(std::uint64_t base_seed, std::uint64_t index) {
  SplitMix64 rng(base_seed + index * 0x9E3779B97F4A7C15ULL);
  return rng.next();
}

namespace {

// Inverse CDF over a row: first state whose cumulative probability exceeds u,
// scanning in canonical order with exact row values. Falls back to the last
// state carrying mass when u lands beyond the accumulated total.
State draw_next(const StochasticMatrix& p, State current, double u) {
  const Vec6 row = p.row(current);
  double cumulative = 0.0;
  int last_positive = index_of(current);
  for (int j = 0; j < 6; ++j) {
    if (row[j] > 0.0) last_positive = j;
    cumulative += row[j];
    if (u < cumulative) return kAllStates[j];
  }
  return kAllStates[last_positive];
}

bool is_absorbing(const StochasticMatrix& p, State s) {
  return p(s, s) == 1.0;
}

}  // namespace

Trajectory simulate_trajectory(const StochasticMatrix& p, State start,
                               int horizon, std::uint64_t seed) {
  if (horizon < 0)
    throw std::invalid_argument("simulate_trajectory: horizon must be >= 0");
  Trajectory t;
  t.states.reserve(static_cast<size_t>(horizon) + 1);
  t.states.push_back(start);
  SplitMix64 rng(seed);
  State current = start;
  for (int day = 0; day < horizon; ++day) {
    if (is_absorbing(p, current)) {
      t.states.insert(t.states.end(), horizon - day, current);
      break;
    }
    current = draw_next(p, current, rng.next_double());
    t.states.push_back(current);
  }
  return t;
}

CohortResult simulate_cohort(const StochasticMatrix& p, State start,
                             int horizon, long long n,
                             std::uint64_t base_seed) {
  if (n < 1) throw std::invalid_argument("simulate_cohort: n must be >= 1");
  if (horizon < 0)
    throw std::invalid_argument("simulate_cohort: horizon must be >= 0");
  CohortResult result;
  result.start = start;
  result.horizon = horizon;
  result.n_trajectories = n;
  result.occupancy.assign(static_cast<size_t>(horizon) + 1, {});

  for (long long k = 0; k < n; ++k) {
    SplitMix64 rng(trajectory_seed(base_seed, static_cast<std::uint64_t>(k)));
    State current = start;
    ++result.occupancy[0][index_of(current)];
    for (int day = 1; day <= horizon; ++day) {
      if (!is_absorbing(p, current))
        current = draw_next(p, current, rng.next_double());
      ++result.occupancy[day][index_of(current)];
    }
  }
  return result;
}

ComparisonTable compare_empirical_analytic(const CohortResult& result,
                                           const StochasticMatrix& p) {
  ComparisonTable table(result.occupancy.size());
  const Distribution start = Distribution::point_mass(result.start);
  const double n = static_cast<double>(result.n_trajectories);
  for (size_t day = 0; day < result.occupancy.size(); ++day) {
    const Distribution analytic =
        evolve(start, p, static_cast<long long>(day));
    for (int s = 0; s < 6; ++s) {
      CellComparison& cell = table[day][s];
      cell.analytic = analytic.at(s);
      cell.empirical = static_cast<double>(result.occupancy[day][s]) / n;
      if (cell.analytic < 1e-12) {
        cell.skipped = true;
        continue;
      }
      const double diff = cell.empirical - cell.analytic;
      const double var = cell.analytic * (1.0 - cell.analytic) / n;
      if (var == 0.0)
        cell.z = diff == 0.0 ? 0.0
                             : std::copysign(
                                   std::numeric_limits<double>::infinity(),
                                   diff);
      else
        cell.z = diff / std::sqrt(var);
    }
  }
  return table;
}

}  // namespace covidmc
