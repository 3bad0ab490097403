#include "strrec/oracle.hpp"

#include <algorithm>

namespace strrec {

QueryStats operator-(const QueryStats& after, const QueryStats& before) {
  QueryStats d;
  d.substring_queries = after.substring_queries - before.substring_queries;
  d.prefix_queries = after.prefix_queries - before.prefix_queries;
  d.total_queried_symbols =
      after.total_queried_symbols - before.total_queried_symbols;
  d.max_query_length = after.max_query_length;
  return d;
}

class Oracle::AutomatonProbe : public Probe {
 public:
  AutomatonProbe(Oracle& oracle, const SuffixAutomaton& index, TextView known)
      : oracle_(oracle),
        index_(index),
        state_(index.walk(index.initial(), known)),
        known_length_(known.size()) {}

  bool extends(TextView t) override {
    oracle_.charge(QueryKind::kSubstring, known_length_ + t.size());
    return index_.walk(state_, t) != SuffixAutomaton::kDead;
  }

  void append(TextView t) override {
    state_ = index_.walk(state_, t);
    known_length_ += t.size();
  }

 private:
  Oracle& oracle_;
  const SuffixAutomaton& index_;
  SuffixAutomaton::State state_;
  std::uint64_t known_length_;
};

class Oracle::PrefixProbe : public Probe {
 public:
  PrefixProbe(Oracle& oracle, TextView known)
      : oracle_(oracle), position_(0), alive_(true) {
    append(known);
  }

  bool extends(TextView t) override {
    oracle_.charge(QueryKind::kPrefix, position_ + t.size());
    return alive_ && matches(t);
  }

  void append(TextView t) override {
    alive_ = alive_ && matches(t);
    position_ += t.size();
  }

 private:
  bool matches(TextView t) const {
    const Text& h = oracle_.hidden_;
    if (position_ + t.size() > h.size()) return false;
    return std::equal(t.begin(), t.end(), h.begin() + position_);
  }

  Oracle& oracle_;
  std::size_t position_;
  bool alive_;
};

namespace {

Text validated(Text hidden) {
  if (hidden.empty()) throw Error("hidden string must be nonempty");
  if (std::find(hidden.begin(), hidden.end(), kSentinel) != hidden.end()) {
    throw Error("hidden string must not contain the sentinel symbol 0");
  }
  return hidden;
}

}  // namespace

Oracle::Oracle(Text hidden)
    : hidden_(validated(std::move(hidden))),
      forward_(hidden_),
      backward_(reversed(hidden_)) {}

void Oracle::charge(QueryKind kind, std::uint64_t length) {
  if (kind == QueryKind::kSubstring) {
    ++stats_.substring_queries;
  } else {
    ++stats_.prefix_queries;
  }
  stats_.total_queried_symbols += length;
  stats_.max_query_length = std::max(stats_.max_query_length, length);
}

bool Oracle::contains_substring(TextView q) {
  charge(QueryKind::kSubstring, q.size());
  return forward_.contains(q);
}

bool Oracle::is_prefix(TextView q) {
  charge(QueryKind::kPrefix, q.size());
  return q.size() <= hidden_.size() &&
         std::equal(q.begin(), q.end(), hidden_.begin());
}

std::unique_ptr<Probe> Oracle::open(QueryKind kind, Orientation orientation,
                                    TextView known) {
  if (kind == QueryKind::kPrefix) {
    if (orientation == Orientation::kReverse) {
      throw Error("prefix queries have no reverse orientation");
    }
    return std::make_unique<PrefixProbe>(*this, known);
  }
  const SuffixAutomaton& index =
      orientation == Orientation::kForward ? forward_ : backward_;
  return std::make_unique<AutomatonProbe>(*this, index, known);
}

SentinelPrefixView Oracle::sentinel_view() { return SentinelPrefixView(*this); }

class SentinelPrefixView::SentinelProbe : public Probe {
 public:
  SentinelProbe(Oracle& base, std::shared_ptr<const SuffixAutomaton> index,
                TextView known)
      : base_(base), index_(std::move(index)), known_length_(known.size()) {
    const Symbol sentinel[] = {kSentinel};
    state_ = index_->walk(index_->walk(index_->initial(), sentinel), known);
  }

  bool extends(TextView t) override {
    base_.charge(QueryKind::kSubstring, 1 + known_length_ + t.size());
    return index_->walk(state_, t) != SuffixAutomaton::kDead;
  }

  void append(TextView t) override {
    state_ = index_->walk(state_, t);
    known_length_ += t.size();
  }

 private:
  Oracle& base_;
  std::shared_ptr<const SuffixAutomaton> index_;
  SuffixAutomaton::State state_;
  std::uint64_t known_length_;
};

SentinelPrefixView::SentinelPrefixView(Oracle& base) : base_(&base) {
  Text marked;
  marked.reserve(base.hidden_.size() + 1);
  marked.push_back(kSentinel);
  marked.insert(marked.end(), base.hidden_.begin(), base.hidden_.end());
  index_ = std::make_shared<const SuffixAutomaton>(marked);
}

bool SentinelPrefixView::is_prefix(TextView q) {
  return SentinelProbe(*base_, index_, {}).extends(q);
}

std::unique_ptr<Probe> SentinelPrefixView::open(QueryKind kind,
                                                Orientation orientation,
                                                TextView known) {
  if (kind == QueryKind::kSubstring) {
    return base_->open(kind, orientation, known);
  }
  if (orientation == Orientation::kReverse) {
    throw Error("prefix queries have no reverse orientation");
  }
  return std::make_unique<SentinelProbe>(*base_, index_, known);
}

}  // namespace strrec
