#ifndef STRREC_ORACLE_HPP_
#define STRREC_ORACLE_HPP_

#include <cstdint>
#include <memory>

#include "strrec/suffix_automaton.hpp"
#include "strrec/text.hpp"

namespace strrec {

struct QueryStats {
  std::uint64_t substring_queries = 0;
  std::uint64_t prefix_queries = 0;
  // Sum of the lengths of every queried string.
  std::uint64_t total_queried_symbols = 0;
  std::uint64_t max_query_length = 0;

  std::uint64_t total_queries() const {
    return substring_queries + prefix_queries;
  }
  friend bool operator==(const QueryStats&, const QueryStats&) = default;
};

// Counters accumulated between two snapshots. The maximum is taken from the
// later snapshot, since it cannot be un-merged.
QueryStats operator-(const QueryStats& after, const QueryStats& before);

enum class QueryKind { kSubstring, kPrefix };

// kReverse works in the mirror image of the hidden string: a probe with known
// string K answers "is rev(t)·rev(K) a substring?" for extends(t).
enum class Orientation { kForward, kReverse };

// A known string K pinned at the query source. extends(t) is one query about
// K·t; the full string K·t is what gets charged, exactly as if it had been
// transmitted. Pinning only saves re-walking K on the answering side.
class Probe {
 public:
  virtual ~Probe() = default;
  virtual bool extends(TextView t) = 0;
  // K <- K·t. Free: no answer is revealed.
  virtual void append(TextView t) = 0;
};

// Anything reconstructors can ask questions of: the real oracle, the
// sentinel-based prefix view, or a recorded answer stream.
class QuerySource {
 public:
  virtual ~QuerySource() = default;
  virtual std::unique_ptr<Probe> open(QueryKind kind, Orientation orientation,
                                      TextView known) = 0;
  virtual QueryStats stats() const = 0;
};

class SentinelPrefixView;

// Holds the hidden string and answers membership questions about it. The
// string itself is never exposed.
class Oracle : public QuerySource {
 public:
  explicit Oracle(Text hidden);

  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  bool contains_substring(TextView q);
  bool is_prefix(TextView q);

  QueryStats stats() const override { return stats_; }
  std::unique_ptr<Probe> open(QueryKind kind, Orientation orientation,
                              TextView known) override;

  // Prefix queries answered as substring queries against $·hidden, where $
  // is the reserved symbol 0. Charged to this oracle as substring queries.
  // The view borrows the oracle and must not outlive it.
  SentinelPrefixView sentinel_view();

 private:
  friend class SentinelPrefixView;
  class AutomatonProbe;
  class PrefixProbe;

  void charge(QueryKind kind, std::uint64_t length);

  Text hidden_;
  SuffixAutomaton forward_;
  SuffixAutomaton backward_;
  QueryStats stats_;
};

class SentinelPrefixView : public QuerySource {
 public:
  bool is_prefix(TextView q);

  // kPrefix probes run against the sentinel index; kSubstring probes are
  // forwarded to the underlying oracle.
  std::unique_ptr<Probe> open(QueryKind kind, Orientation orientation,
                              TextView known) override;
  QueryStats stats() const override { return base_->stats(); }

 private:
  friend class Oracle;
  class SentinelProbe;

  explicit SentinelPrefixView(Oracle& base);

  Oracle* base_;
  std::shared_ptr<const SuffixAutomaton> index_;
};

}  // namespace strrec

#endif  // STRREC_ORACLE_HPP_
