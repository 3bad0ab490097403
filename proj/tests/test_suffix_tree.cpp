#include <random>

#include "doctest.h"
#include "reference.hpp"
#include "strrec/suffix_tree.hpp"

using namespace strrec;

namespace {

SuffixTree build(const Text& t, Symbol sigma) {
  SuffixTree st(sigma);
  st.append(t);
  return st;
}

SuffixTree build(std::string_view letters) {
  const Text t = from_letters(letters);
  return build(t, max_symbol(t));
}

// Edge intervals along the root path spell the locus; sibling edges start
// with distinct symbols; subtree sizes add up.
void check_structure(const SuffixTree& st) {
  const Text& text = st.text();
  for (std::size_t u = 1; u < st.node_count(); ++u) {
    const auto id = static_cast<NodeId>(u);
    Text spelled;
    std::vector<NodeId> path;
    for (NodeId w = id; w != st.root(); w = st.parent(w)) path.push_back(w);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const Interval e = st.edge_interval(*it);
      REQUIRE(e.length() > 0);
      spelled.insert(spelled.end(), text.begin() + e.begin,
                     text.begin() + e.end);
    }
    const TextView loc = st.locus(id);
    CHECK(Text(loc.begin(), loc.end()) == spelled);
    CHECK(st.depth(id) == spelled.size());
    if (!st.is_leaf(id)) CHECK(st.children(id).size() >= 2);
  }
  for (std::size_t u = 0; u < st.node_count(); ++u) {
    const auto id = static_cast<NodeId>(u);
    std::size_t total = 1;
    Symbol prev = 0;
    for (const auto& [first, v] : st.children(id)) {
      CHECK(first > prev);
      prev = first;
      CHECK(st.locus(v)[st.depth(id)] == first);
      CHECK(st.parent(v) == id);
      total += st.subtree_size(v);
    }
    CHECK(st.subtree_size(id) == total);
  }
}

}  // namespace

TEST_CASE("empty and single-symbol trees") {
  SuffixTree st(2);
  CHECK(st.node_count() == 1);
  CHECK(st.leaf_count() == 0);
  CHECK(st.locus_interval(st.root()) == Interval{0, 0});
  SuffixTree big(26);
  big.append(1);
  CHECK(big.leaf_count() == 1);
  CHECK_THROWS_AS(SuffixTree(0), Error);
  CHECK_THROWS_AS(st.append(3), Error);
  CHECK_THROWS_AS(st.append(0), Error);
}

TEST_CASE("abab keeps two implicit suffixes") {
  const SuffixTree st = build("abab");
  CHECK(st.node_count() == ref::suffix_tree_nodes(from_letters("abab")));
  CHECK(st.implicit_suffixes() == 2);
  CHECK(ref::suffixes_from_tree(st) == ref::suffixes(from_letters("abab")));
  for (std::size_t u = 1; u < st.node_count(); ++u) {
    const auto id = static_cast<NodeId>(u);
    if (!st.is_leaf(id)) continue;
    const Interval iv = st.locus_interval(id);
    CHECK(iv.end == 4);
  }
  check_structure(st);
}

TEST_CASE("unary text stays a single leaf") {
  const SuffixTree st = build("aaaaa");
  CHECK(st.node_count() == 2);
  CHECK(st.leaf_count() == 1);
  CHECK(st.implicit_suffixes() == 4);
  CHECK(ref::suffixes_from_tree(st) == ref::suffixes(from_letters("aaaaa")));
}

TEST_CASE("running example tree") {
  const SuffixTree st = build("AAABCABCABCAAA");
  check_structure(st);
  // The last three suffixes A, AA, AAA are proper prefixes of the text.
  CHECK(st.implicit_suffixes() == 3);
  bool found = false;
  for (std::size_t u = 0; u < st.node_count(); ++u) {
    const auto id = static_cast<NodeId>(u);
    if (to_letters(st.locus(id)) == "abcabca") {
      found = true;
      CHECK(st.locus_interval(id) == Interval{2, 9});  // [3,9] 1-based
      CHECK_FALSE(st.is_leaf(id));
    }
  }
  CHECK(found);
  CHECK(st.dump().find("[3,9] abcabca") != std::string::npos);
  CHECK(st.contains(from_letters("BCABCA")));
  CHECK_FALSE(st.contains(from_letters("AAAA")));
}

TEST_CASE("suffixes and membership match brute force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng() % 100;
    const Symbol sigma = 1 + rng() % 4;
    const Text t = ref::random_text(rng, n, sigma);
    const SuffixTree st = build(t, sigma);
    CHECK(ref::suffixes_from_tree(st) == ref::suffixes(t));
    if (n <= 40) {
      CHECK(st.node_count() == ref::suffix_tree_nodes(t));
      for (const Text& x : ref::distinct_substrings(t)) CHECK(st.contains(x));
    }
    for (int q = 0; q < 30; ++q) {
      const Text x = ref::random_text(rng, 1 + rng() % 6, sigma);
      CHECK(st.contains(x) == ref::contains(t, x));
    }
    check_structure(st);
  }
}

TEST_CASE("ancestry test") {
  const SuffixTree st = build("AAABCABCABCAAA");
  for (std::size_t u = 0; u < st.node_count(); ++u) {
    for (std::size_t v = 0; v < st.node_count(); ++v) {
      const auto a = static_cast<NodeId>(u);
      const auto b = static_cast<NodeId>(v);
      bool expect = false;
      for (NodeId w = b; w != kNoNode; w = st.parent(w)) expect |= w == a;
      CHECK(st.in_subtree(a, b) == expect);
    }
  }
}
