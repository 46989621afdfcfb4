#include "covidmc/state.hpp"

namespace covidmc {

char state_code(State s) { return "SEHUID"[index_of(s)]; }

char state_alias(State s) { return s == State::D ? 'F' : state_code(s); }

std::optional<State> parse_state(std::string_view text) {
  if (text.size() != 1) return std::nullopt;
  switch (text[0]) {
    case 'S': return State::S;
    case 'E': return State::E;
    case 'H': return State::H;
    case 'U': return State::U;
    case 'I': return State::I;
    case 'D': return State::D;
    case 'F': return State::D;  // the tables write the dead state as F
    default: return std::nullopt;
  }
}

}  // namespace covidmc
