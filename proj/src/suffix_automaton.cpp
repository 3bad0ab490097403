#include "strrec/suffix_automaton.hpp"

#include <algorithm>

namespace strrec {

SuffixAutomaton::SuffixAutomaton(TextView text) {
  states_.reserve(2 * text.size() + 1);
  states_.emplace_back();
  for (Symbol c : text) extend(c);
}

SuffixAutomaton::State SuffixAutomaton::find(State s, Symbol c) const {
  const auto& next = states_[s].next;
  auto it = std::lower_bound(
      next.begin(), next.end(), c,
      [](const std::pair<Symbol, State>& e, Symbol v) { return e.first < v; });
  return (it != next.end() && it->first == c) ? it->second : kDead;
}

void SuffixAutomaton::set(State s, Symbol c, State to) {
  auto& next = states_[s].next;
  auto it = std::lower_bound(
      next.begin(), next.end(), c,
      [](const std::pair<Symbol, State>& e, Symbol v) { return e.first < v; });
  if (it != next.end() && it->first == c) {
    it->second = to;
  } else {
    next.insert(it, {c, to});
  }
}

void SuffixAutomaton::extend(Symbol c) {
  const State cur = static_cast<State>(states_.size());
  states_.emplace_back();
  states_[cur].len = states_[last_].len + 1;
  states_[cur].first_end = states_[cur].len - 1;
  State p = last_;
  while (p != kDead && find(p, c) == kDead) {
    set(p, c, cur);
    p = states_[p].link;
  }
  if (p == kDead) {
    states_[cur].link = 0;
  } else {
    const State q = find(p, c);
    if (states_[p].len + 1 == states_[q].len) {
      states_[cur].link = q;
    } else {
      const State clone = static_cast<State>(states_.size());
      StateData copy = states_[q];
      copy.len = states_[p].len + 1;
      states_.push_back(std::move(copy));
      while (p != kDead && find(p, c) == q) {
        set(p, c, clone);
        p = states_[p].link;
      }
      states_[q].link = clone;
      states_[cur].link = clone;
    }
  }
  last_ = cur;
}

SuffixAutomaton::State SuffixAutomaton::step(State from, Symbol c) const {
  if (from == kDead) return kDead;
  return find(from, c);
}

SuffixAutomaton::State SuffixAutomaton::walk(State from, TextView t) const {
  for (Symbol c : t) {
    if (from == kDead) break;
    from = find(from, c);
  }
  return from;
}

}  // namespace strrec
