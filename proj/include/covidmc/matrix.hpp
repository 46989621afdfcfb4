#pragma once

#include <array>
#include <vector>

#include "covidmc/state.hpp"

namespace covidmc {

using Mat6 = std::array<std::array<double, 6>, 6>;
using Vec6 = std::array<double, 6>;

/// Row-stochastic 6x6 matrix of one-day transition probabilities.
///
/// Instances are immutable and always satisfy: every entry in [0,1] (up to
/// floating-point drift after powers) and every row summing to 1 within
/// kRowSumTol. Construct through make_matrix(), which validates and never
/// renormalizes.
class StochasticMatrix {
 public:
  static constexpr double kRowSumTol = 1e-9;

  double operator()(State from, State to) const {
    return rows_[index_of(from)][index_of(to)];
  }
  double at(int row, int col) const { return rows_[row][col]; }
  const Mat6& rows() const { return rows_; }

  Vec6 row(State from) const { return rows_[index_of(from)]; }

  bool operator==(const StochasticMatrix& other) const {
    return rows_ == other.rows_;
  }

 private:
  explicit StochasticMatrix(const Mat6& rows) : rows_(rows) {}
  Mat6 rows_;

  friend StochasticMatrix make_matrix(const Mat6&);
  friend StochasticMatrix matrix_power(const StochasticMatrix&, long long);
  friend class Fitter;
};

/// Validates and wraps a 6x6 array. The input is preserved bit-for-bit.
/// Throws RangeError for entries outside [0,1] and RowSumError when a row
/// deviates from sum 1 by more than kRowSumTol.
StochasticMatrix make_matrix(const Mat6& rows);

/// P^n by exponentiation-by-squaring (n >= 0). The result is re-validated:
/// a row sum off 1 by more than kRowSumTol raises NumericalDriftError.
StochasticMatrix matrix_power(const StochasticMatrix& p, long long n);

/// Entry (from, to) of matrix_power(p, n).
double n_step_probability(const StochasticMatrix& p, State from, State to,
                          long long n);

/// Probability vector over the six states; sums to 1 within 1e-9.
class Distribution {
 public:
  static constexpr double kSumTol = 1e-9;

  static Distribution point_mass(State s);

  double operator[](State s) const { return mass_[index_of(s)]; }
  double at(int i) const { return mass_[i]; }
  const Vec6& mass() const { return mass_; }

 private:
  explicit Distribution(const Vec6& mass) : mass_(mass) {}
  Vec6 mass_;

  friend Distribution make_distribution(const Vec6&);
  friend Distribution evolve(const Distribution&, const StochasticMatrix&,
                             long long);
};

Distribution make_distribution(const Vec6& mass);

/// mu * P^n.
Distribution evolve(const Distribution& mu, const StochasticMatrix& p,
                    long long n);

struct StateClassification {
  std::vector<State> absorbing;
  std::vector<State> transient;
};

/// A state is absorbing iff its diagonal entry equals 1; everything else is
/// reported transient.
StateClassification classify_states(const StochasticMatrix& p);

}  // namespace covidmc
