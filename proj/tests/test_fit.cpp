#include <doctest.h>

#include <cmath>

#include "covidmc/errors.hpp"
#include "covidmc/fit.hpp"
#include "covidmc/fixtures.hpp"
#include "covidmc/simulate.hpp"

using namespace covidmc;

namespace {

double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

StochasticMatrix random_masked(const StructureMask& mask, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Mat6 rows{};
  for (int i = 0; i < 6; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < 6; ++j)
      if (mask.at(i, j)) {
        rows[i][j] = 0.05 + 0.95 * rng.next_double();
        row_sum += rows[i][j];
      }
    for (int j = 0; j < 6; ++j) rows[i][j] /= row_sum;
  }
  return make_matrix(rows);
}

}  // namespace

TEST_CASE("project_to_simplex") {
  const std::array<bool, 2> full2{true, true};
  CHECK(project_to_simplex(std::array<double, 2>{0.5, 0.5}, full2) ==
        std::vector<double>{0.5, 0.5});
  CHECK(project_to_simplex(std::array<double, 2>{2.0, 0.0}, full2) ==
        std::vector<double>{1.0, 0.0});

  const auto thirds = project_to_simplex(std::array<double, 3>{0.6, 0.6, 0.6},
                                         std::array<bool, 3>{true, true, true});
  for (double x : thirds) CHECK(x == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  // off-support coordinates are forced to zero
  const auto masked =
      project_to_simplex(std::array<double, 3>{0.9, 0.8, 0.7},
                         std::array<bool, 3>{true, false, true});
  CHECK(masked[1] == 0.0);
  CHECK(std::fabs(sum(masked) - 1.0) <= 1e-12);

  CHECK_THROWS_AS(project_to_simplex(std::array<double, 1>{1.0},
                                     std::array<bool, 1>{false}),
                  EmptySupportError);
}

TEST_CASE("project_to_simplex properties") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<double, 6> v{};
    std::array<bool, 6> support{};
    int on = 0;
    for (int i = 0; i < 6; ++i) {
      v[i] = (rng.next_double() - 0.3) * 4.0;
      support[i] = rng.next() % 3 != 0;
      on += support[i];
    }
    if (on == 0) support[rng.next() % 6] = true;

    const auto x = project_to_simplex(v, support);
    for (int i = 0; i < 6; ++i) {
      CHECK(x[i] >= 0.0);  // exact nonnegativity
      if (!support[i]) CHECK(x[i] == 0.0);
    }
    CHECK(std::fabs(sum(x) - 1.0) <= 1e-12);

    const auto twice = project_to_simplex(x, support);
    for (int i = 0; i < 6; ++i) CHECK(std::fabs(twice[i] - x[i]) <= 1e-12);
  }
}

TEST_CASE("make_mask validation") {
  std::array<std::array<bool, 6>, 6> empty_row{};
  for (int j = 0; j < 6; ++j) empty_row[0][j] = false;
  for (int i = 1; i < 6; ++i) empty_row[i][i] = true;
  CHECK_THROWS_AS(make_mask(empty_row), MaskError);

  std::array<std::array<bool, 6>, 6> leaky_d{};
  for (int i = 0; i < 6; ++i) leaky_d[i][i] = true;
  leaky_d[5][0] = true;  // D row may only self-loop
  CHECK_THROWS_AS(make_mask(leaky_d), MaskError);
}

TEST_CASE("single-horizon fit recovers the tracked entries") {
  const StochasticMatrix& p = fixtures::paper_matrix();
  const int day = 1;
  const HorizonTable table = horizons_from_matrix(p, std::span(&day, 1));

  const FitResult result =
      fit_matrix_from_horizons(table, fixtures::paper_mask());
  for (const Transition& t : kTrackedTransitions)
    CHECK(std::fabs(result.matrix(t.from, t.to) - p(t.from, t.to)) <= 1e-9);
}

TEST_CASE("round-trip fit on random masked matrices") {
  const StructureMask& mask = fixtures::paper_mask();
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const StochasticMatrix truth = random_masked(mask, seed);
    const HorizonTable table =
        horizons_from_matrix(truth, fixtures::table_horizons());
    const FitResult result = fit_matrix_from_horizons(table, mask);
    CHECK(result.residual <= 1e-6);
    CHECK(result.converged);
  }
}

TEST_CASE("accepted residuals never increase") {
  const HorizonTable table = horizons_from_matrix(
      fixtures::paper_matrix(), fixtures::table_horizons());
  const FitResult result =
      fit_matrix_from_horizons(table, fixtures::paper_mask());
  REQUIRE(result.residual_trace.size() >= 2);
  for (size_t i = 1; i < result.residual_trace.size(); ++i)
    CHECK(result.residual_trace[i] <= result.residual_trace[i - 1]);
}

TEST_CASE("fit rejects bad input") {
  CHECK_THROWS_AS(
      fit_matrix_from_horizons(HorizonTable{}, fixtures::paper_mask()), Error);

  HorizonTable out_of_range;
  out_of_range.horizons = {7};
  out_of_range.values.push_back({2.0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(
      fit_matrix_from_horizons(out_of_range, fixtures::paper_mask()),
      RangeError);
}

TEST_CASE("fit result rows live on the masked simplex") {
  const FitResult result =
      fit_matrix_from_horizons(fixtures::table5(), fixtures::paper_mask());
  const StructureMask& mask = fixtures::paper_mask();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (!mask.at(i, j)) CHECK(result.matrix.at(i, j) == 0.0);
  CHECK(result.converged);
  CHECK(result.residual >= 0.0);
}
