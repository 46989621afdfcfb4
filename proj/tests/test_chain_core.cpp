#include <doctest.h>

#include <cmath>

#include "covidmc/absorbing.hpp"
#include "covidmc/errors.hpp"
#include "covidmc/fixtures.hpp"
#include "covidmc/matrix.hpp"
#include "covidmc/simulate.hpp"

using namespace covidmc;

namespace {

Mat6 identity_rows() {
  Mat6 rows{};
  for (int i = 0; i < 6; ++i) rows[i][i] = 1.0;
  return rows;
}

// independent of the library's power routine on purpose
Mat6 naive_multiply(const Mat6& a, const Mat6& b) {
  Mat6 r{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Vec6 vec_times(const Vec6& v, const Mat6& m) {
  Vec6 out{};
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 6; ++i) out[j] += v[i] * m[i][j];
  return out;
}

// truncated first-passage summation: sum of k * (absorbed exactly at day k)
double first_passage_expected_steps(const StochasticMatrix& p, State start,
                                    int kmax) {
  Vec6 mu{};
  mu[index_of(start)] = 1.0;
  double absorbed_before = 0.0;
  double total = 0.0;
  for (int k = 1; k <= kmax; ++k) {
    mu = vec_times(mu, p.rows());
    const double absorbed = mu[index_of(State::D)];
    total += k * (absorbed - absorbed_before);
    absorbed_before = absorbed;
  }
  return total;
}

StochasticMatrix random_stochastic(std::uint64_t seed) {
  SplitMix64 rng(seed);
  Mat6 rows{};
  for (int i = 0; i < 6; ++i) {
    double sum = 0.0;
    for (int j = 0; j < 6; ++j) {
      rows[i][j] = 0.01 + rng.next_double();
      sum += rows[i][j];
    }
    for (int j = 0; j < 6; ++j) rows[i][j] /= sum;
  }
  return make_matrix(rows);
}

}  // namespace

TEST_CASE("make_matrix validates and preserves input") {
  const StochasticMatrix& p = fixtures::paper_matrix();
  CHECK(p(State::S, State::S) == 0.68);
  CHECK(p(State::I, State::D) == 0.75);
  CHECK(p(State::D, State::D) == 1.0);

  CHECK_NOTHROW(make_matrix(identity_rows()));

  Mat6 bad = p.rows();
  bad[0][0] = 0.67;  // row S now sums to 0.99
  CHECK_THROWS_AS(make_matrix(bad), RowSumError);
  try {
    make_matrix(bad);
  } catch (const RowSumError& e) {
    CHECK(e.row == 0);
    CHECK(e.deviation == doctest::Approx(0.01).epsilon(1e-9));
  }

  Mat6 out_of_range = identity_rows();
  out_of_range[2][2] = 1.5;
  CHECK_THROWS_AS(make_matrix(out_of_range), RangeError);
  out_of_range[2][2] = -0.5;
  CHECK_THROWS_AS(make_matrix(out_of_range), RangeError);
}

TEST_CASE("matrix_power basics") {
  const StochasticMatrix& p = fixtures::paper_matrix();

  const StochasticMatrix p0 = matrix_power(p, 0);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(p0.at(i, j) == (i == j ? 1.0 : 0.0));

  CHECK(matrix_power(p, 1) == p);
  CHECK_THROWS_AS(matrix_power(p, -1), std::invalid_argument);

  // frozen from an exact rational-arithmetic evaluation of the same matrix
  CHECK(n_step_probability(p, State::I, State::D, 7) ==
        doctest::Approx(0.754276626304).epsilon(1e-12));
  CHECK(n_step_probability(p, State::H, State::S, 7) ==
        doctest::Approx(0.36502626209056).epsilon(1e-12));
  CHECK(n_step_probability(p, State::H, State::U, 7) ==
        doctest::Approx(0.00018175295872).epsilon(1e-12));
  CHECK(n_step_probability(p, State::E, State::D, 365) ==
        doctest::Approx(0.8463016454618947).epsilon(1e-12));
}

TEST_CASE("absorbing row stays a point mass under powers") {
  const StochasticMatrix& p = fixtures::paper_matrix();
  for (long long n : {0LL, 1LL, 7LL, 100LL, 3650LL}) {
    CHECK(n_step_probability(p, State::D, State::D, n) == 1.0);
  }
}

TEST_CASE("row stochasticity is preserved up to n = 3650") {
  std::vector<StochasticMatrix> cases = {fixtures::paper_matrix()};
  for (std::uint64_t seed = 1; seed <= 8; ++seed)
    cases.push_back(random_stochastic(seed));
  for (const auto& p : cases) {
    for (long long n : {2LL, 16LL, 365LL, 1000LL, 3650LL}) {
      const StochasticMatrix pn = matrix_power(p, n);  // validates internally
      for (int i = 0; i < 6; ++i) {
        double sum = 0.0;
        for (int j = 0; j < 6; ++j) sum += pn.at(i, j);
        CHECK(std::fabs(sum - 1.0) <= 1e-9);
      }
    }
  }
}

TEST_CASE("power of a sum equals product of powers") {
  const StochasticMatrix& paper = fixtures::paper_matrix();
  SplitMix64 rng(99);
  std::vector<StochasticMatrix> cases = {paper, random_stochastic(21),
                                         random_stochastic(22)};
  for (const auto& p : cases) {
    for (int rep = 0; rep < 4; ++rep) {
      const long long a = 1 + static_cast<long long>(rng.next() % 500);
      const long long b = 1 + static_cast<long long>(rng.next() % 500);
      const Mat6 lhs = matrix_power(p, a + b).rows();
      const Mat6 rhs =
          naive_multiply(matrix_power(p, a).rows(), matrix_power(p, b).rows());
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
          CHECK(std::fabs(lhs[i][j] - rhs[i][j]) <= 1e-12);
    }
  }
}

TEST_CASE("death-column probabilities are nondecreasing in n") {
  const StochasticMatrix& p = fixtures::paper_matrix();
  Vec6 previous{};
  for (int n = 0; n <= 730; ++n) {
    const StochasticMatrix pn = matrix_power(p, n);
    for (State from : kAllStates) {
      const double value = pn(from, State::D);
      CHECK(value >= previous[index_of(from)]);
      previous[index_of(from)] = value;
    }
  }
}

TEST_CASE("absorption limit of the paper chain") {
  const StochasticMatrix& p = fixtures::paper_matrix();

  // the transient block's slow mode is ~0.9949 per day, so day 2000 still
  // carries ~3.6e-5 of unabsorbed mass and day 4500 is below 1e-9
  const StochasticMatrix p2000 = matrix_power(p, 2000);
  double min_d = 1.0;
  for (State from : kAllStates)
    min_d = std::min(min_d, p2000(from, State::D));
  CHECK(1.0 - min_d > 3.5e-5);
  CHECK(1.0 - min_d < 3.7e-5);

  const StochasticMatrix p4500 = matrix_power(p, 4500);
  for (State from : kAllStates)
    CHECK(p4500(from, State::D) >= 1.0 - 5e-10);
}

TEST_CASE("S/E sub-block spectral radius via characteristic polynomial") {
  const StochasticMatrix& p = fixtures::paper_matrix();
  const double a = p(State::S, State::S), b = p(State::S, State::E);
  const double c = p(State::E, State::S), d = p(State::E, State::E);
  const double trace = a + d, det = a * d - b * c;
  const double root =
      (trace + std::sqrt(trace * trace - 4.0 * det)) / 2.0;
  CHECK(root == doctest::Approx(0.9803173).epsilon(1e-6));
}

TEST_CASE("evolve") {
  const StochasticMatrix& p = fixtures::paper_matrix();

  const Distribution dead = Distribution::point_mass(State::D);
  const Distribution still_dead = evolve(dead, p, 100);
  CHECK(still_dead[State::D] == 1.0);

  const Distribution mu = make_distribution({0.1, 0.2, 0.3, 0.2, 0.1, 0.1});
  const Distribution same = evolve(mu, p, 0);
  for (int i = 0; i < 6; ++i) CHECK(same.at(i) == mu.at(i));

  const Distribution from_i = evolve(Distribution::point_mass(State::I), p, 7);
  CHECK(from_i[State::D] == n_step_probability(p, State::I, State::D, 7));
  double sum = 0.0;
  for (int i = 0; i < 6; ++i) sum += from_i.at(i);
  CHECK(std::fabs(sum - 1.0) <= 1e-9);
}

TEST_CASE("make_distribution validates") {
  CHECK_THROWS_AS(make_distribution({0.5, 0.6, 0, 0, 0, 0}), RowSumError);
  CHECK_THROWS_AS(make_distribution({1.5, -0.5, 0, 0, 0, 0}), RangeError);
}

TEST_CASE("classify_states") {
  const StateClassification paper = classify_states(fixtures::paper_matrix());
  CHECK(paper.absorbing == std::vector<State>{State::D});
  CHECK(paper.transient == std::vector<State>{State::S, State::E, State::H,
                                              State::U, State::I});

  const StateClassification id = classify_states(make_matrix(identity_rows()));
  CHECK(id.absorbing.size() == 6);
  CHECK(id.transient.empty());

  Mat6 cyclic{};
  for (int i = 0; i < 6; ++i) cyclic[i][(i + 1) % 6] = 1.0;
  const StateClassification cyc = classify_states(make_matrix(cyclic));
  CHECK(cyc.absorbing.empty());
  CHECK(cyc.transient.size() == 6);
}

TEST_CASE("absorbing_analysis of the paper chain") {
  const StochasticMatrix& p = fixtures::paper_matrix();
  const AbsorptionReport report = absorbing_analysis(p);

  REQUIRE(report.transient_states.size() == 5);
  REQUIRE(report.absorbing_states == std::vector<State>{State::D});

  for (size_t i = 0; i < report.transient_states.size(); ++i) {
    CHECK(std::fabs(report.absorption_probs[i][0] - 1.0) <= 1e-9);
    CHECK(report.expected_steps[i] >= 1.0);
    for (double n : report.fundamental[i]) CHECK(n >= 0.0);
  }

  for (size_t i = 0; i < report.transient_states.size(); ++i) {
    const double oracle =
        first_passage_expected_steps(p, report.transient_states[i], 100000);
    CHECK(std::fabs(report.expected_steps[i] - oracle) <=
          1e-6 * std::fabs(oracle));
  }
}

TEST_CASE("absorbing_analysis edge cases") {
  const AbsorptionReport id_report =
      absorbing_analysis(make_matrix(identity_rows()));
  CHECK(id_report.transient_states.empty());
  CHECK(id_report.absorbing_states.size() == 6);
  CHECK(id_report.fundamental.empty());
  CHECK(id_report.expected_steps.empty());

  Mat6 cyclic{};
  for (int i = 0; i < 6; ++i) cyclic[i][(i + 1) % 6] = 1.0;
  CHECK_THROWS_AS(absorbing_analysis(make_matrix(cyclic)),
                  NoAbsorbingStateError);

  // S and E form a closed class that never reaches D: I-Q is singular
  Mat6 trapped{};
  trapped[0][0] = 0.5;
  trapped[0][1] = 0.5;
  trapped[1][0] = 0.5;
  trapped[1][1] = 0.5;
  trapped[2][5] = 1.0;
  trapped[2][2] = 0.0;
  trapped[3][5] = 1.0;
  trapped[4][5] = 1.0;
  trapped[5][5] = 1.0;
  // H,U,I all jump straight to D; D absorbing; S,E trapped
  CHECK_THROWS_AS(absorbing_analysis(make_matrix(trapped)), SingularError);
}
