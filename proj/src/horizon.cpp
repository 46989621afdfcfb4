#include "covidmc/horizon.hpp"

#include "covidmc/errors.hpp"

namespace covidmc {

std::string transition_label(const Transition& t) {
  return {state_alias(t.from), state_alias(t.to)};
}

std::optional<Transition> parse_transition_label(std::string_view label) {
  if (label.size() != 2) return std::nullopt;
  const auto from = parse_state(label.substr(0, 1));
  const auto to = parse_state(label.substr(1, 1));
  if (!from || !to) return std::nullopt;
  return Transition{*from, *to};
}

void validate_horizon_table(const HorizonTable& table) {
  if (table.horizons.size() != table.values.size())
    throw Error("horizon table: horizons and values disagree in length");
  for (size_t i = 0; i < table.horizons.size(); ++i) {
    if (i > 0 && table.horizons[i] == table.horizons[i - 1])
      throw DuplicateHorizonError(table.horizons[i]);
    if (i > 0 && table.horizons[i] < table.horizons[i - 1])
      throw Error("horizon table: days not increasing");
    for (int k = 0; k < 10; ++k) {
      const double v = table.values[i][k];
      if (!(v >= 0.0 && v <= 1.0))
        throw RangeError(static_cast<int>(i), k, v);
    }
  }
}

HorizonTable horizons_from_matrix(const StochasticMatrix& p,
                                  std::span<const int> days) {
  HorizonTable table;
  for (int n : days) {
    const StochasticMatrix pn = matrix_power(p, n);
    std::array<double, 10> row{};
    for (int k = 0; k < 10; ++k)
      row[k] = pn(kTrackedTransitions[k].from, kTrackedTransitions[k].to);
    table.horizons.push_back(n);
    table.values.push_back(row);
  }
  return table;
}

}  // namespace covidmc
