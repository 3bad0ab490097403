#ifndef STRREC_MEASURES_HPP_
#define STRREC_MEASURES_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "strrec/text.hpp"

namespace strrec {

struct Phrase {
  // Start of the earlier occurrence this phrase copies; empty for a fresh
  // symbol.
  std::optional<std::size_t> source;
  std::size_t length = 1;
  Symbol symbol = 0;  // only meaningful for fresh phrases
};

struct LZFactorization {
  std::vector<Phrase> phrases;
  bool overlap_allowed = true;

  std::size_t size() const { return phrases.size(); }
  Text decode() const;
};

struct MeasureReport {
  std::size_t n = 0;
  Symbol sigma = 0;
  std::size_t rle = 0;
  std::size_t z = 0;
  std::size_t z_no = 0;

  // Printed for context only. The smallest grammar is never computed; this
  // is the textbook upper bound z_no * log2(n / z_no).
  double grammar_upper_reference() const;
  // z_no / (z * log2 n); diagnostic, not a bound.
  double overlap_ratio() const;
};

std::size_t rle_runs(TextView s);

// Greedy left-to-right parse. Each phrase is the longest prefix of the
// remaining suffix that occurs starting at an earlier position (leftmost
// such source), or a single fresh symbol when nothing matches. Without
// overlap the source occurrence must end before the phrase starts.
LZFactorization lz77(TextView s, bool allow_overlap);

MeasureReport measure(TextView s);

}  // namespace strrec

#endif  // STRREC_MEASURES_HPP_
