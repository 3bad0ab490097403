#ifndef STRREC_UNIVERSAL_HPP_
#define STRREC_UNIVERSAL_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "strrec/compressor.hpp"
#include "strrec/oracle.hpp"
#include "strrec/reconstruct.hpp"

namespace strrec {

// Binary strings of length n <= 24 are handled as bit masks: bit i set means
// position i holds symbol 2.
using Mask = std::uint32_t;

inline constexpr std::size_t kDefaultEnumerationCap = 16;
inline constexpr std::size_t kHardEnumerationCap = 24;
inline constexpr std::size_t kDirectQueryThreshold = 5;

Text mask_to_text(Mask mask, std::size_t n);
Mask text_to_mask(TextView text);

enum class Execution { kSerial, kParallel };

struct CandidateSet {
  std::size_t n = 0;
  std::size_t budget = 0;
  std::vector<Mask> members;  // ascending

  std::size_t size() const { return members.size(); }
};

// The data-parallel pieces. The serial versions are the straightforward
// reference the parallel ones are tested against.
namespace kernels {

std::vector<std::uint32_t> code_lengths_serial(std::size_t n,
                                               const Compressor& c);
std::vector<std::uint32_t> code_lengths_parallel(std::size_t n,
                                                 const Compressor& c);

// counts[p] = number of members containing the length-`len` binary pattern
// p, where the first pattern symbol is the most significant bit.
std::vector<std::uint32_t> substring_counts_serial(
    const std::vector<Mask>& members, std::size_t n, std::size_t len);
std::vector<std::uint32_t> substring_counts_parallel(
    const std::vector<Mask>& members, std::size_t n, std::size_t len);

}  // namespace kernels

// Code lengths of every binary string of length n under one compressor.
class CandidateUniverse {
 public:
  CandidateUniverse(std::size_t n, const Compressor& c,
                    std::size_t cap = kDefaultEnumerationCap,
                    Execution exec = Execution::kParallel);

  std::size_t n() const { return n_; }
  std::size_t code_length(Mask m) const { return lengths_.at(m); }
  std::size_t max_code_length() const { return max_length_; }
  // All strings compressing to at most `budget` bits.
  CandidateSet members(std::size_t budget) const;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> lengths_;
  std::size_t max_length_ = 0;
};

CandidateSet enumerate_candidates(std::size_t n, std::size_t budget,
                                  const Compressor& c,
                                  std::size_t cap = kDefaultEnumerationCap);

struct Splitter {
  Text pattern;
  std::size_t hits = 0;  // members containing the pattern
  // No pattern met the 1/5..4/5 window; this one is closest to half.
  bool flagged = false;
};

// First pattern, shortest then lexicographic, contained in between
// ceil(|M|/5) and floor(4|M|/5) members.
Splitter find_splitter(const CandidateSet& m,
                       Execution exec = Execution::kParallel);

bool splitter_in_window(std::size_t hits, std::size_t set_size);

struct SplitRecord {
  std::size_t set_size = 0;
  std::size_t hits = 0;
  bool flagged = false;
};

struct UniversalReport {
  Text recovered;
  QueryStats stats;
  std::size_t rounds = 0;
  std::size_t final_budget = 0;
  std::vector<SplitRecord> splits;
};

// Exponential search on the bit budget: for budgets 1, 2, 4, ... narrow the
// candidates compressing within budget by splitter queries until at most
// five remain, then query those in full. The hidden string must be binary
// of known length n.
UniversalReport reconstruct_universal(Oracle& oracle,
                                      const CandidateUniverse& universe,
                                      Execution exec = Execution::kParallel);
UniversalReport reconstruct_universal(Oracle& oracle, std::size_t n,
                                      const Compressor& c,
                                      std::size_t cap = kDefaultEnumerationCap);

// Logs every answer a wrapped source gives.
class RecordingSource : public QuerySource {
 public:
  explicit RecordingSource(QuerySource& inner) : inner_(inner) {}
  std::unique_ptr<Probe> open(QueryKind kind, Orientation orientation,
                              TextView known) override;
  QueryStats stats() const override { return inner_.stats(); }
  const Bits& answers() const { return answers_; }

 private:
  QuerySource& inner_;
  Bits answers_;
};

// Answers queries from a recorded bit stream, whatever is asked.
class ReplaySource : public QuerySource {
 public:
  explicit ReplaySource(const Bits& answers) : answers_(answers) {}
  std::unique_ptr<Probe> open(QueryKind kind, Orientation orientation,
                              TextView known) override;
  QueryStats stats() const override { return stats_; }
  bool exhausted() const { return position_ == answers_.size(); }

 private:
  class ReplayProbe;
  bool next(QueryKind kind, std::size_t length);

  const Bits& answers_;
  std::size_t position_ = 0;
  QueryStats stats_;
};

// Any deterministic reconstructor is a compressor: the code of S is the
// sequence of oracle answers seen while reconstructing S, and decoding
// replays the reconstructor against those answers.
class ReconstructorCompressor : public Compressor {
 public:
  ReconstructorCompressor(Algorithm algorithm, Symbol sigma)
      : algorithm_(algorithm), sigma_(sigma) {}
  std::string name() const override;
  Bits compress(TextView s) const override;
  Text decompress(const Bits& code) const override;

 private:
  Algorithm algorithm_;
  Symbol sigma_;
};

inline ReconstructorCompressor compressor_from_reconstructor(
    Algorithm algorithm, Symbol sigma) {
  return ReconstructorCompressor(algorithm, sigma);
}

}  // namespace strrec

#endif  // STRREC_UNIVERSAL_HPP_
