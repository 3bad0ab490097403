#ifndef STRREC_GALLOP_HPP_
#define STRREC_GALLOP_HPP_

#include <cstddef>
#include <optional>

namespace strrec {

// Largest l in [lo, hi] with pred(l), for a predicate that is true up to
// some point and false afterwards. pred(lo) must already be known true and
// is not asked again. An empty `hi` means unbounded. With hi_known_false the
// value at hi is taken as false without asking.
//
// Probes lo*2, lo*4, ... until one fails (or hi is reached), then bisects
// the last bracket. For lo = 1 an answer l costs at most
// 2*floor(log2 l) + 2 evaluations.
template <typename Pred>
std::size_t gallop_search(std::size_t lo, std::optional<std::size_t> hi,
                          bool hi_known_false, Pred&& pred) {
  if (hi && lo >= *hi) return lo;
  std::size_t good = lo;
  std::size_t bad = 0;
  std::size_t probe = lo * 2;
  for (;;) {
    if (hi && probe >= *hi) {
      if (!hi_known_false && pred(*hi)) return *hi;
      bad = *hi;
      break;
    }
    if (pred(probe)) {
      good = probe;
      probe *= 2;
    } else {
      bad = probe;
      break;
    }
  }
  while (bad - good > 1) {
    const std::size_t mid = good + (bad - good) / 2;
    if (pred(mid)) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

}  // namespace strrec

#endif  // STRREC_GALLOP_HPP_
