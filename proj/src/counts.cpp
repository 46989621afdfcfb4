#include "covidmc/counts.hpp"

#include <string>

#include "covidmc/errors.hpp"

namespace covidmc {

namespace {

std::string row_label(int i) {
  return std::string(1, state_code(kAllStates[i]));
}

}  // namespace

StochasticMatrix mle_from_counts(const CountTable& table, Findings* notes) {
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (table.published[i][j] && table.counts[i][j] < 0)
        throw NegativeCountError(i, j, table.counts[i][j]);

  Mat6 rows{};
  const int d = index_of(State::D);
  for (int i = 0; i < 6; ++i) {
    if (i == d) {
      rows[i][d] = 1.0;  // the dead state never leaves
      continue;
    }
    const long long diag = table.published[i][i] ? table.counts[i][i] : 0;
    long long off_sum = 0;
    for (int j = 0; j < 6; ++j)
      if (j != i && table.published[i][j]) off_sum += table.counts[i][j];

    if (diag == 0 && off_sum == 0) throw EmptyRowError(i);

    if (diag >= off_sum) {
      // diagonal is the row's occupancy total; leftover mass returns to S
      // (rows H,U,I) or stays put (rows S,E)
      const double total = static_cast<double>(diag);
      for (int j = 0; j < 6; ++j)
        if (j != i && table.published[i][j])
          rows[i][j] = static_cast<double>(table.counts[i][j]) / total;
      const double residual = static_cast<double>(diag - off_sum) / total;
      const bool returns_to_s = i == index_of(State::H) ||
                                i == index_of(State::U) ||
                                i == index_of(State::I);
      rows[i][returns_to_s ? index_of(State::S) : i] += residual;
    } else {
      // destination counts exceed the stated total (overlapping categories):
      // fall back to plain frequencies over every published cell
      const double total = static_cast<double>(diag + off_sum);
      for (int j = 0; j < 6; ++j)
        if (table.published[i][j])
          rows[i][j] = static_cast<double>(table.counts[i][j]) / total;
      if (notes)
        notes->push_back(Finding::note(
            "row " + row_label(i) +
                ": published destination counts exceed the stated total; "
                "normalized over all published cells",
            static_cast<double>(diag), static_cast<double>(off_sum), false));
    }
  }
  return make_matrix(rows);
}

}  // namespace covidmc
