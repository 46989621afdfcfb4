#include "covidmc/absorbing.hpp"

#include <limits>

#include "covidmc/errors.hpp"
#include "lin.hpp"

namespace covidmc {

AbsorptionReport absorbing_analysis(const StochasticMatrix& p) {
  const StateClassification cls = classify_states(p);
  if (cls.absorbing.empty()) throw NoAbsorbingStateError();

  AbsorptionReport report;
  report.transient_states = cls.transient;
  report.absorbing_states = cls.absorbing;
  const int nt = static_cast<int>(cls.transient.size());
  const int na = static_cast<int>(cls.absorbing.size());
  if (nt == 0) return report;  // everything absorbs immediately

  detail::DenseMatrix i_minus_q(nt, std::vector<double>(nt, 0.0));
  detail::DenseMatrix r(nt, std::vector<double>(na, 0.0));
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < nt; ++j)
      i_minus_q[i][j] =
          (i == j ? 1.0 : 0.0) - p(cls.transient[i], cls.transient[j]);
    for (int j = 0; j < na; ++j)
      r[i][j] = p(cls.transient[i], cls.absorbing[j]);
  }

  detail::DenseMatrix fundamental;
  if (!detail::solve_dense(i_minus_q, detail::identity_dense(nt), fundamental))
    throw SingularError(std::numeric_limits<double>::infinity());

  const double cond = detail::norm1(i_minus_q) * detail::norm1(fundamental);
  if (cond > 1e12) throw SingularError(cond);

  report.fundamental = fundamental;
  report.absorption_probs.assign(nt, std::vector<double>(na, 0.0));
  report.expected_steps.assign(nt, 0.0);
  for (int i = 0; i < nt; ++i) {
    double steps = 0.0;
    for (int j = 0; j < nt; ++j) steps += fundamental[i][j];
    report.expected_steps[i] = steps;
    for (int j = 0; j < na; ++j) {
      double b = 0.0;
      for (int k = 0; k < nt; ++k) b += fundamental[i][k] * r[k][j];
      report.absorption_probs[i][j] = b;
    }
  }
  return report;
}

}  // namespace covidmc
