#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace covidmc {

/// The six compartments of the chain, in fixed matrix order.
/// Every 6x6 structure in this library indexes rows and columns by this
/// enumeration: S (susceptible/recovered), E (infected), H (hospitalized),
/// U (intensive care), I (intubated), D (dead).
enum class State : int { S = 0, E = 1, H = 2, U = 3, I = 4, D = 5 };

inline constexpr int kNumStates = 6;

inline constexpr std::array<State, kNumStates> kAllStates = {
    State::S, State::E, State::H, State::U, State::I, State::D};

constexpr int index_of(State s) { return static_cast<int>(s); }

/// Canonical one-letter code ("D" for the dead state).
char state_code(State s);

/// The code used by the source tables ("F" instead of "D").
char state_alias(State s);

/// Parses "S","E","H","U","I","D"; "F" is accepted as an alias for D.
std::optional<State> parse_state(std::string_view text);

}  // namespace covidmc
