#include <algorithm>
#include <cstdint>
#include <limits>

#include "strrec/universal.hpp"

namespace strrec::kernels {

namespace {

Mask full_range(std::size_t n) { return n == 0 ? 1U : (Mask{1} << n); }

Text pattern_text(std::uint32_t p, std::size_t len) {
  Text t(len);
  for (std::size_t k = 0; k < len; ++k) {
    t[k] = ((p >> (len - 1 - k)) & 1U) != 0 ? 2 : 1;
  }
  return t;
}

}  // namespace

std::vector<std::uint32_t> code_lengths_serial(std::size_t n,
                                               const Compressor& c) {
  std::vector<std::uint32_t> out(full_range(n));
  for (Mask m = 0; m < out.size(); ++m) {
    out[m] = static_cast<std::uint32_t>(c.compress(mask_to_text(m, n)).size());
  }
  return out;
}

std::vector<std::uint32_t> code_lengths_parallel(std::size_t n,
                                                 const Compressor& c) {
  const std::int64_t total = full_range(n);
  std::vector<std::uint32_t> out(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
  for (std::int64_t m = 0; m < total; ++m) {
    out[m] = static_cast<std::uint32_t>(
        c.compress(mask_to_text(static_cast<Mask>(m), n)).size());
  }
  return out;
}

std::vector<std::uint32_t> substring_counts_serial(
    const std::vector<Mask>& members, std::size_t n, std::size_t len) {
  const std::uint32_t patterns = std::uint32_t{1} << len;
  std::vector<std::uint32_t> counts(patterns, 0);
  std::vector<Text> texts;
  texts.reserve(members.size());
  for (Mask m : members) texts.push_back(mask_to_text(m, n));
  for (std::uint32_t p = 0; p < patterns; ++p) {
    const Text pat = pattern_text(p, len);
    for (const Text& t : texts) {
      if (std::search(t.begin(), t.end(), pat.begin(), pat.end()) != t.end()) {
        ++counts[p];
      }
    }
  }
  return counts;
}

std::vector<std::uint32_t> substring_counts_parallel(
    const std::vector<Mask>& members, std::size_t n, std::size_t len) {
  const std::uint32_t patterns = std::uint32_t{1} << len;
  const std::uint32_t window_mask = patterns - 1;
  std::vector<std::uint32_t> counts(patterns, 0);
  if (len == 0 || len > n) return counts;
  const std::int64_t count = static_cast<std::int64_t>(members.size());

#pragma omp parallel
  {
    std::vector<std::uint32_t> local(patterns, 0);
    // Last member index that hit each pattern, so repeats count once.
    std::vector<std::int64_t> stamp(patterns, -1);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      const Mask m = members[static_cast<std::size_t>(i)];
      std::uint32_t window = 0;
      for (std::size_t pos = 0; pos < n; ++pos) {
        window = ((window << 1) | ((m >> pos) & 1U)) & window_mask;
        if (pos + 1 < len) continue;
        if (stamp[window] != i) {
          stamp[window] = i;
          ++local[window];
        }
      }
    }
#pragma omp critical(strrec_substring_counts)
    for (std::uint32_t p = 0; p < patterns; ++p) counts[p] += local[p];
  }
  return counts;
}

}  // namespace strrec::kernels
