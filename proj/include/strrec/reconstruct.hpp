#ifndef STRREC_RECONSTRUCT_HPP_
#define STRREC_RECONSTRUCT_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "strrec/centroid.hpp"
#include "strrec/oracle.hpp"
#include "strrec/suffix_tree.hpp"
#include "strrec/text.hpp"

namespace strrec {

enum class Algorithm { kNaive, kRle, kLzPrefix, kLzSubstring };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);
inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::kNaive, Algorithm::kRle, Algorithm::kLzPrefix,
    Algorithm::kLzSubstring};

enum class Direction { kForward, kBackward };

struct Phase {
  Direction direction = Direction::kForward;
  // Characters, runs or phrases, depending on the algorithm.
  std::size_t units = 0;
};

// One reconstructed unit, spelled in natural left-to-right order.
struct Unit {
  Direction direction = Direction::kForward;
  Text symbols;
};

struct ReconstructionReport {
  Algorithm algorithm = Algorithm::kNaive;
  Text recovered;
  QueryStats stats;  // queries issued by this run only
  std::vector<Phase> phases;
  std::vector<Unit> trace;

  std::size_t units() const;
  std::size_t units(Direction d) const;
};

struct LzOptions {
  // Build the whole centroid tree after every phrase instead of computing
  // centroids on demand along each search path. Same queries, more time.
  bool full_decomposition = false;
  CentroidAudit* audit = nullptr;
};

// Largest symbol of the hidden string, assuming every symbol of [1..sigma]
// occurs in it: gallop over 1, 2, 4, ... then bisect. Underestimates if the
// assumption fails.
Symbol discover_alphabet(QuerySource& source);

// One character per step, sigma probes each; forward until stuck, then
// backward.
ReconstructionReport reconstruct_naive(QuerySource& source, Symbol sigma);

// One maximal run per step: probe the next symbol, then gallop on the run
// length.
ReconstructionReport reconstruct_rle(QuerySource& source, Symbol sigma);

struct PhraseSearchResult {
  Text phrase;
  // Whether the tree root was visited and its children probed.
  bool root_probed = false;
  std::size_t visits = 0;
};

// Finds a longest-reachable t spelled by a path of `st` such that
// probe.extends(t) holds, where the probe is pinned at the text of `st`.
// Walks the centroid tree: a node whose locus extends sends the search to
// the child it can be extended with, one that does not sends it toward its
// parent. The deepest extending node is then continued into the middle of
// its chosen edge by galloping on the edge length.
PhraseSearchResult lz_phrase_search(const SuffixTree& st,
                                    CentroidNavigator& nav, Probe& probe);

// Prefix-query model: phrases are appended while R·t stays a prefix.
ReconstructionReport reconstruct_lz_prefix(QuerySource& source, Symbol sigma,
                                           const LzOptions& options = {});

// Substring-query model: forward phrases until R cannot be extended (so R
// is a suffix), then the same machinery on the reversed string.
ReconstructionReport reconstruct_lz_substring(QuerySource& source,
                                              Symbol sigma,
                                              const LzOptions& options = {});

ReconstructionReport reconstruct(Algorithm algorithm, QuerySource& source,
                                 Symbol sigma, const LzOptions& options = {});

}  // namespace strrec

#endif  // STRREC_RECONSTRUCT_HPP_
