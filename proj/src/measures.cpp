#include "strrec/measures.hpp"

#include <algorithm>
#include <cmath>

#include "strrec/suffix_automaton.hpp"

namespace strrec {

namespace {

void require_nonempty(TextView s) {
  if (s.empty()) throw Error("measures are undefined on the empty string");
}

}  // namespace

Text LZFactorization::decode() const {
  Text out;
  for (const Phrase& p : phrases) {
    if (!p.source) {
      out.push_back(p.symbol);
      continue;
    }
    // Copy one symbol at a time so self-overlapping sources expand.
    for (std::size_t k = 0; k < p.length; ++k) {
      out.push_back(out[*p.source + k]);
    }
  }
  return out;
}

std::size_t rle_runs(TextView s) {
  require_nonempty(s);
  std::size_t runs = 1;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] != s[i - 1]) ++runs;
  }
  return runs;
}

LZFactorization lz77(TextView s, bool allow_overlap) {
  require_nonempty(s);
  LZFactorization f;
  f.overlap_allowed = allow_overlap;
  // Every state knows where its leftmost occurrence ends, so a phrase can be
  // grown one symbol at a time while an early enough occurrence exists.
  const SuffixAutomaton sam(s);
  std::size_t i = 0;
  while (i < s.size()) {
    SuffixAutomaton::State state = sam.initial();
    std::size_t len = 0;
    while (i + len < s.size()) {
      const auto next = sam.step(state, s[i + len]);
      const std::size_t end = sam.first_end(next);
      const bool usable =
          allow_overlap ? end < i + len : end < i;  // start < i, or ends < i
      if (!usable) break;
      state = next;
      ++len;
    }
    if (len == 0) {
      f.phrases.push_back({std::nullopt, 1, s[i]});
      ++i;
    } else {
      f.phrases.push_back({sam.first_end(state) + 1 - len, len, 0});
      i += len;
    }
  }
  return f;
}

MeasureReport measure(TextView s) {
  MeasureReport r;
  r.n = s.size();
  r.sigma = max_symbol(s);
  r.rle = rle_runs(s);
  r.z = lz77(s, true).size();
  r.z_no = lz77(s, false).size();
  // z_no may exceed rle: "aaaa" has one run but parses as a|a|aa.
  if (!(r.z <= r.z_no && r.z_no <= r.n && r.rle <= r.n)) {
    throw Error("measure chain z <= z_no <= n violated");
  }
  return r;
}

double MeasureReport::grammar_upper_reference() const {
  if (z_no == 0) return 0.0;
  const double ratio = static_cast<double>(n) / static_cast<double>(z_no);
  return static_cast<double>(z_no) * std::max(1.0, std::log2(ratio));
}

double MeasureReport::overlap_ratio() const {
  const double denom =
      static_cast<double>(z) * std::max(1.0, std::log2(static_cast<double>(n)));
  return denom == 0.0 ? 0.0 : static_cast<double>(z_no) / denom;
}

}  // namespace strrec
