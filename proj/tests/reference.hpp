// Slow, obviously-correct implementations used as test oracles.
#ifndef STRREC_TESTS_REFERENCE_HPP_
#define STRREC_TESTS_REFERENCE_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "strrec/oracle.hpp"
#include "strrec/suffix_tree.hpp"
#include "strrec/text.hpp"

namespace ref {

using strrec::Symbol;
using strrec::Text;
using strrec::TextView;

inline bool occurs_at(TextView s, TextView q, std::size_t i) {
  if (i + q.size() > s.size()) return false;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (s[i + k] != q[k]) return false;
  }
  return true;
}

inline bool contains(TextView s, TextView q) {
  if (q.empty()) return true;
  for (std::size_t i = 0; i + q.size() <= s.size(); ++i) {
    if (occurs_at(s, q, i)) return true;
  }
  return false;
}

inline bool is_prefix(TextView s, TextView q) { return occurs_at(s, q, 0); }

inline std::size_t runs(TextView s) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == 0 || s[i] != s[i - 1]) ++r;
  }
  return r;
}

struct RefPhrase {
  std::size_t start;
  std::size_t length;
  std::ptrdiff_t source;  // -1 for a fresh symbol
};

// Greedy parse by trying every length from the longest down and every
// source from the left.
inline std::vector<RefPhrase> lz77(TextView s, bool allow_overlap) {
  std::vector<RefPhrase> out;
  std::size_t i = 0;
  while (i < s.size()) {
    RefPhrase best{i, 1, -1};
    for (std::size_t len = s.size() - i; len >= 1 && best.source < 0; --len) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!allow_overlap && j + len > i) break;
        bool match = true;
        for (std::size_t k = 0; k < len && match; ++k) {
          match = s[j + k] == s[i + k];
        }
        if (match) {
          best = {i, len, static_cast<std::ptrdiff_t>(j)};
          break;
        }
      }
    }
    out.push_back(best);
    i += best.length;
  }
  return out;
}

inline std::set<Text> distinct_substrings(TextView s) {
  std::set<Text> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j <= s.size(); ++j) {
      out.emplace(s.begin() + i, s.begin() + j);
    }
  }
  return out;
}

// Explicit nodes of the suffix tree without terminal: the root, every
// substring followed by two or more distinct symbols, and every suffix that
// occurs only once.
inline std::size_t suffix_tree_nodes(TextView s) {
  std::size_t count = 1;
  for (const Text& x : distinct_substrings(s)) {
    std::set<Symbol> next;
    std::size_t occurrences = 0;
    for (std::size_t i = 0; i + x.size() <= s.size(); ++i) {
      if (!occurs_at(s, x, i)) continue;
      ++occurrences;
      if (i + x.size() < s.size()) next.insert(s[i + x.size()]);
    }
    const bool suffix = occurs_at(s, x, s.size() - x.size());
    if (next.size() >= 2 || (suffix && occurrences == 1)) ++count;
  }
  return count;
}

// Loci of all leaves plus the suffixes left implicit.
inline std::set<Text> suffixes_from_tree(const strrec::SuffixTree& st) {
  std::set<Text> out;
  for (std::size_t u = 1; u < st.node_count(); ++u) {
    const auto id = static_cast<strrec::NodeId>(u);
    if (st.is_leaf(id)) {
      const TextView loc = st.locus(id);
      out.emplace(loc.begin(), loc.end());
    }
  }
  const Text& t = st.text();
  for (std::size_t k = 1; k <= st.implicit_suffixes(); ++k) {
    out.emplace(t.end() - static_cast<std::ptrdiff_t>(k), t.end());
  }
  return out;
}

inline std::set<Text> suffixes(TextView s) {
  std::set<Text> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.emplace(s.begin() + i, s.end());
  return out;
}

inline Text random_text(std::mt19937_64& rng, std::size_t n, Symbol sigma) {
  std::uniform_int_distribution<Symbol> pick(1, sigma);
  Text t(n);
  for (Symbol& c : t) c = pick(rng);
  return t;
}

inline Text binary_text(std::uint32_t bits, std::size_t n) {
  Text t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = ((bits >> i) & 1U) != 0 ? 2 : 1;
  return t;
}

// Counts every extends() call independently of the oracle's own counters.
class TallySource : public strrec::QuerySource {
 public:
  explicit TallySource(strrec::QuerySource& inner) : inner_(inner) {}

  std::unique_ptr<strrec::Probe> open(strrec::QueryKind kind,
                                      strrec::Orientation orientation,
                                      TextView known) override {
    return std::make_unique<TallyProbe>(
        inner_.open(kind, orientation, known), calls_);
  }
  strrec::QueryStats stats() const override { return inner_.stats(); }
  std::size_t calls() const { return calls_; }

 private:
  class TallyProbe : public strrec::Probe {
   public:
    TallyProbe(std::unique_ptr<strrec::Probe> inner, std::size_t& calls)
        : inner_(std::move(inner)), calls_(calls) {}
    bool extends(TextView t) override {
      ++calls_;
      return inner_->extends(t);
    }
    void append(TextView t) override { inner_->append(t); }

   private:
    std::unique_ptr<strrec::Probe> inner_;
    std::size_t& calls_;
  };

  strrec::QuerySource& inner_;
  std::size_t calls_ = 0;
};

// Answers extends(t) for a known string K against a visible hidden string.
class ScanProbe : public strrec::Probe {
 public:
  ScanProbe(Text hidden, Text known)
      : hidden_(std::move(hidden)), known_(std::move(known)) {}
  bool extends(TextView t) override {
    ++calls;
    Text q = known_;
    q.insert(q.end(), t.begin(), t.end());
    return contains(hidden_, q);
  }
  void append(TextView t) override {
    known_.insert(known_.end(), t.begin(), t.end());
  }
  std::size_t calls = 0;

 private:
  Text hidden_;
  Text known_;
};

}  // namespace ref

#endif  // STRREC_TESTS_REFERENCE_HPP_
