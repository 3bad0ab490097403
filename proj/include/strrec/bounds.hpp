#ifndef STRREC_BOUNDS_HPP_
#define STRREC_BOUNDS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>

// Query-count ceilings checked on every run. The leading constants (4 for
// runs, 8 for phrases, 15/25 for the universal algorithm) were calibrated
// against exhaustive and randomized runs and are frozen here.
namespace strrec::bounds {

inline double log2_at_least_zero(double x) {
  return x <= 1.0 ? 0.0 : std::log2(x);
}

// One character per sigma probes, plus two rounds that find no extension.
inline double naive(std::size_t n, std::size_t sigma) {
  return static_cast<double>(sigma) * static_cast<double>(n + 2);
}

inline double rle(std::size_t n, std::size_t runs, std::size_t sigma) {
  const double r = static_cast<double>(std::max<std::size_t>(runs, 1));
  return 4.0 * r *
         (static_cast<double>(sigma) +
          log2_at_least_zero(static_cast<double>(n) / r) + 2.0);
}

// p is the number of phrases the run itself emitted.
inline double lz(std::size_t n, std::size_t sigma, std::size_t phrases) {
  return 8.0 * static_cast<double>(sigma) * static_cast<double>(phrases) *
         (log2_at_least_zero(static_cast<double>(n)) + 2.0);
}

inline double universal(std::size_t code_bits) {
  return 15.0 * static_cast<double>(code_bits) + 25.0;
}

// Reference curves, never asserted.
inline double worst_case_lower(std::size_t n, std::size_t sigma) {
  return static_cast<double>(sigma) * static_cast<double>(n) / 4.0;
}

inline double lz_lower_shape(std::size_t n, std::size_t sigma,
                             std::size_t z_no) {
  if (sigma < 2) return 0.0;
  return static_cast<double>(sigma) * static_cast<double>(z_no) *
         log2_at_least_zero(static_cast<double>(n)) /
         std::log2(static_cast<double>(sigma));
}

}  // namespace strrec::bounds

#endif  // STRREC_BOUNDS_HPP_
