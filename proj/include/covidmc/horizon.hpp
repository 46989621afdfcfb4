#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covidmc/matrix.hpp"

namespace covidmc {

/// The ten published transitions, in table column order.
struct Transition {
  State from;
  State to;
};

inline constexpr std::array<Transition, 10> kTrackedTransitions = {{
    {State::E, State::D}, {State::H, State::D}, {State::U, State::D},
    {State::I, State::D}, {State::H, State::U}, {State::U, State::I},
    {State::H, State::I}, {State::H, State::S}, {State::U, State::S},
    {State::I, State::S},
}};

/// Two-letter column label in the source's notation ("EF", "HU", ...;
/// D is written F).
std::string transition_label(const Transition& t);

std::optional<Transition> parse_transition_label(std::string_view label);

/// n-step probabilities for the ten tracked transitions at a list of day
/// horizons. Horizons are strictly increasing; values lie in [0,1].
struct HorizonTable {
  std::vector<int> horizons;
  std::vector<std::array<double, 10>> values;  // one row per horizon

  double at(int horizon_index, int transition_index) const {
    return values[horizon_index][transition_index];
  }
};

/// Throws Error subtypes when invariants are violated (used by the parser and
/// the fitter entry points).
void validate_horizon_table(const HorizonTable& table);

/// Evaluates the ten tracked transitions of P^n for each day; cells equal
/// n_step_probability exactly.
HorizonTable horizons_from_matrix(const StochasticMatrix& p,
                                  std::span<const int> days);

}  // namespace covidmc
