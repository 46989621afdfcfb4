#pragma once

#include <vector>

#include "covidmc/matrix.hpp"

namespace covidmc {

/// Absorbing-chain quantities over the transient block Q:
/// fundamental N = (I-Q)^-1, absorption probabilities B = N*R and expected
/// days to absorption t = N*1. Matrices are indexed by position in
/// transient_states / absorbing_states.
struct AbsorptionReport {
  std::vector<State> transient_states;
  std::vector<State> absorbing_states;
  std::vector<std::vector<double>> fundamental;
  std::vector<std::vector<double>> absorption_probs;
  std::vector<double> expected_steps;
};

/// Throws NoAbsorbingStateError when no state is absorbing and SingularError
/// when (I-Q) has a 1-norm condition estimate above 1e12. A chain where every
/// state is absorbing yields a report with empty transient sections.
AbsorptionReport absorbing_analysis(const StochasticMatrix& p);

}  // namespace covidmc
