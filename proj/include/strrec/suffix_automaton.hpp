#ifndef STRREC_SUFFIX_AUTOMATON_HPP_
#define STRREC_SUFFIX_AUTOMATON_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "strrec/text.hpp"

namespace strrec {

// Suffix automaton (DAWG) of a fixed string. Every substring of the string
// corresponds to a path from the initial state, so a membership test costs
// O(|q| log sigma) and never depends on the indexed length.
class SuffixAutomaton {
 public:
  using State = std::int32_t;
  static constexpr State kDead = -1;

  explicit SuffixAutomaton(TextView text);

  State initial() const { return 0; }
  // Follows one transition; kDead is absorbing.
  State step(State from, Symbol c) const;
  State walk(State from, TextView t) const;
  bool contains(TextView t) const { return walk(initial(), t) != kDead; }

  std::size_t state_count() const { return states_.size(); }
  // Longest string of the state, and the end index of its leftmost
  // occurrence (shared by every string of the state).
  std::size_t length(State s) const { return states_[s].len; }
  std::size_t first_end(State s) const { return states_[s].first_end; }

 private:
  struct StateData {
    std::int32_t len = 0;
    State link = kDead;
    std::int32_t first_end = 0;
    std::vector<std::pair<Symbol, State>> next;  // sorted by symbol
  };

  void extend(Symbol c);
  State find(State s, Symbol c) const;
  void set(State s, Symbol c, State to);

  std::vector<StateData> states_;
  State last_ = 0;
};

}  // namespace strrec

#endif  // STRREC_SUFFIX_AUTOMATON_HPP_
