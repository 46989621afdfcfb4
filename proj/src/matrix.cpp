#include "covidmc/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "covidmc/errors.hpp"
#include "mat6.hpp"

namespace covidmc {

StochasticMatrix make_matrix(const Mat6& rows) {
  for (int i = 0; i < 6; ++i) {
    double sum = 0.0;
    for (int j = 0; j < 6; ++j) {
      const double v = rows[i][j];
      if (!(v >= 0.0 && v <= 1.0)) throw RangeError(i, j, v);
      sum += v;
    }
    const double dev = std::fabs(sum - 1.0);
    if (dev > StochasticMatrix::kRowSumTol) throw RowSumError(i, dev);
  }
  return StochasticMatrix(rows);
}

StochasticMatrix matrix_power(const StochasticMatrix& p, long long n) {
  if (n < 0) throw std::invalid_argument("matrix_power: n must be >= 0");
  Mat6 result = detail::power6(p.rows(), n);
  // no renormalization: drift beyond tolerance is an error
  for (int i = 0; i < 6; ++i) {
    double sum = 0.0;
    for (int j = 0; j < 6; ++j) sum += result[i][j];
    const double dev = std::fabs(sum - 1.0);
    if (dev > StochasticMatrix::kRowSumTol) throw NumericalDriftError(i, dev);
  }
  return StochasticMatrix(result);
}

double n_step_probability(const StochasticMatrix& p, State from, State to,
                          long long n) {
  return matrix_power(p, n)(from, to);
}

Distribution Distribution::point_mass(State s) {
  Vec6 mass{};
  mass[index_of(s)] = 1.0;
  return Distribution(mass);
}

Distribution make_distribution(const Vec6& mass) {
  double sum = 0.0;
  for (int i = 0; i < 6; ++i) {
    if (!(mass[i] >= 0.0 && mass[i] <= 1.0)) throw RangeError(0, i, mass[i]);
    sum += mass[i];
  }
  const double dev = std::fabs(sum - 1.0);
  if (dev > Distribution::kSumTol) throw RowSumError(0, dev);
  return Distribution(mass);
}

Distribution evolve(const Distribution& mu, const StochasticMatrix& p,
                    long long n) {
  const StochasticMatrix pn = matrix_power(p, n);
  Vec6 out{};
  for (int j = 0; j < 6; ++j) {
    double s = 0.0;
    for (int i = 0; i < 6; ++i) s += mu.at(i) * pn.at(i, j);
    out[j] = s;
  }
  double sum = 0.0;
  for (double v : out) sum += v;
  const double dev = std::fabs(sum - 1.0);
  if (dev > Distribution::kSumTol) throw NumericalDriftError(0, dev);
  return Distribution(out);
}

StateClassification classify_states(const StochasticMatrix& p) {
  StateClassification c;
  for (State s : kAllStates) {
    if (p(s, s) == 1.0)
      c.absorbing.push_back(s);
    else
      c.transient.push_back(s);
  }
  return c;
}

}  // namespace covidmc
