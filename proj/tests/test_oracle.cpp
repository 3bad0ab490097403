#include <random>

#include "doctest.h"
#include "reference.hpp"
#include "strrec/oracle.hpp"
#include "strrec/reconstruct.hpp"

using namespace strrec;

TEST_CASE("letters map to symbols starting at one") {
  CHECK(from_letters("abz") == Text{1, 2, 26});
  CHECK(from_letters("ABC") == Text{1, 2, 3});
  CHECK(to_letters(Text{0, 1, 2}) == "$ab");
  CHECK_THROWS_AS(from_letters("a-b"), Error);
}

TEST_CASE("bytes are remapped densely by first occurrence") {
  CHECK(from_bytes_dense("zzxz") == Text{1, 1, 2, 1});
  CHECK(from_bytes_dense("") == Text{});
}

TEST_CASE("fresh oracle has zero stats") {
  Oracle o(from_letters("abbabba"));
  CHECK(o.stats() == QueryStats{});
}

TEST_CASE("empty hidden string and sentinel symbol are rejected") {
  CHECK_THROWS_AS(Oracle(Text{}), Error);
  CHECK_THROWS_AS(Oracle(Text{1, 0, 1}), Error);
}

TEST_CASE("substring queries") {
  Oracle o(from_letters("abbabba"));
  CHECK(o.contains_substring(from_letters("abba")));
  CHECK_FALSE(o.contains_substring(from_letters("aa")));
  CHECK(o.contains_substring({}));
  CHECK(o.contains_substring(from_letters("abbabba")));
  CHECK_FALSE(o.contains_substring(from_letters("abbabbaa")));
  CHECK_FALSE(o.contains_substring(Text{3}));
  CHECK(o.stats().substring_queries == 6);
}

TEST_CASE("long unary query") {
  Oracle o(Text(10000, 1));
  CHECK(o.contains_substring(Text(10000, 1)));
  CHECK_FALSE(o.contains_substring(Text(10001, 1)));
}

TEST_CASE("prefix queries") {
  Oracle o(from_letters("abbabba"));
  CHECK(o.is_prefix(from_letters("abb")));
  CHECK_FALSE(o.is_prefix(from_letters("bba")));
  CHECK(o.is_prefix({}));
  CHECK_FALSE(o.is_prefix(from_letters("abbabbab")));
  CHECK(o.stats().prefix_queries == 4);
  CHECK(o.stats().substring_queries == 0);
}

TEST_CASE("stats arithmetic") {
  Oracle o(from_letters("abbabba"));
  o.contains_substring(from_letters("a"));
  o.contains_substring(from_letters("ab"));
  o.contains_substring(from_letters("abba"));
  const QueryStats s = o.stats();
  CHECK(s.substring_queries == 3);
  CHECK(s.total_queried_symbols == 7);
  CHECK(s.max_query_length == 4);
}

TEST_CASE("sentinel view answers prefix queries as substring queries") {
  Oracle o(from_letters("ab"));
  SentinelPrefixView v = o.sentinel_view();
  CHECK(v.is_prefix(from_letters("a")));
  CHECK_FALSE(v.is_prefix(from_letters("b")));
  CHECK(v.is_prefix(from_letters("ab")));
  CHECK(o.stats().substring_queries == 3);
  CHECK(o.stats().prefix_queries == 0);
  // "$a", "$b", "$ab"
  CHECK(o.stats().total_queried_symbols == 2 + 2 + 3);
}

TEST_CASE("probes charge the full query") {
  Oracle o(from_letters("abcabd"));
  auto p = o.open(QueryKind::kSubstring, Orientation::kForward,
                  from_letters("ab"));
  CHECK(p->extends(from_letters("c")));
  CHECK(p->extends(from_letters("d")));
  CHECK_FALSE(p->extends(from_letters("a")));
  p->append(from_letters("c"));
  CHECK(p->extends(from_letters("ab")));
  CHECK(o.stats().substring_queries == 4);
  CHECK(o.stats().total_queried_symbols == 3 + 3 + 3 + 5);
  CHECK(o.stats().max_query_length == 5);

  auto r = o.open(QueryKind::kSubstring, Orientation::kReverse,
                  from_letters("db"));
  CHECK(r->extends(from_letters("a")));   // "abd"
  CHECK_FALSE(r->extends(from_letters("c")));
  CHECK_THROWS_AS(o.open(QueryKind::kPrefix, Orientation::kReverse, {}), Error);
}

TEST_CASE("answers match a brute-force scan") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 200;
    const Symbol sigma = 1 + rng() % 4;
    const Text hidden = ref::random_text(rng, n, sigma);
    Oracle o(hidden);
    SentinelPrefixView view = o.sentinel_view();
    for (int q = 0; q < 40; ++q) {
      Text query;
      if (q % 2 == 0) {
        // A real substring, possibly mutated, possibly overlong.
        const std::size_t i = rng() % n;
        const std::size_t len = rng() % (n - i + 3);
        for (std::size_t k = 0; k < len; ++k) {
          query.push_back(i + k < n ? hidden[i + k] : 1 + rng() % sigma);
        }
        if (!query.empty() && rng() % 3 == 0) {
          query[rng() % query.size()] = 1 + rng() % sigma;
        }
      } else {
        query = ref::random_text(rng, rng() % 5, sigma);
      }
      const QueryStats before = o.stats();
      const bool sub = o.contains_substring(query);
      CHECK(sub == ref::contains(hidden, query));
      const bool pre = o.is_prefix(query);
      CHECK(pre == ref::is_prefix(hidden, query));
      if (pre) CHECK(sub);
      CHECK(view.is_prefix(query) == pre);
      const QueryStats after = o.stats();
      CHECK(after.substring_queries == before.substring_queries + 2);
      CHECK(after.prefix_queries == before.prefix_queries + 1);
      CHECK(after.total_queried_symbols >= after.max_query_length);
    }
  }
}

TEST_CASE("stats agree with an independent tally") {
  Oracle o(from_letters("ab"));
  ref::TallySource tally(o);
  const ReconstructionReport r = reconstruct_naive(tally, 2);
  CHECK(r.recovered == from_letters("ab"));
  CHECK(o.stats().substring_queries == tally.calls());
  CHECK(r.stats.substring_queries == tally.calls());
}
