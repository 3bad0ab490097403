#ifndef STRREC_SUFFIX_TREE_HPP_
#define STRREC_SUFFIX_TREE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strrec/text.hpp"

namespace strrec {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

// Half-open [begin, end) into the tree's text.
struct Interval {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t length() const { return end - begin; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Online suffix tree (Ukkonen) of an append-only text. No terminal symbol is
// ever added, so suffixes that are proper prefixes of other suffixes stay
// implicit and have no leaf. Leaf edges are open-ended and grow with the
// text.
class SuffixTree {
 public:
  explicit SuffixTree(Symbol sigma);

  void append(Symbol c);
  void append(TextView t) {
    for (Symbol c : t) append(c);
  }

  const Text& text() const { return text_; }
  Symbol sigma() const { return sigma_; }
  NodeId root() const { return 0; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t leaf_count() const;

  NodeId parent(NodeId u) const { return node(u).parent; }
  bool is_leaf(NodeId u) const { return node(u).end == kOpen; }
  // Children keyed by the first symbol of their edge, ascending.
  const std::vector<std::pair<Symbol, NodeId>>& children(NodeId u) const {
    return node(u).children;
  }
  NodeId child(NodeId u, Symbol first) const;
  // Nodes in the subtree of u, u included. Kept current on every append.
  std::size_t subtree_size(NodeId u) const { return node(u).subtree; }
  // True iff v lies in the subtree of u (u included). Walks up from v, so
  // it costs the number of nodes between them.
  bool in_subtree(NodeId u, NodeId v) const;

  // String depth, i.e. |locus(u)|.
  std::size_t depth(NodeId u) const;
  // Interval of the text spelling locus(u); empty for the root.
  Interval locus_interval(NodeId u) const;
  TextView locus(NodeId u) const;
  Interval edge_interval(NodeId u) const;

  // Number of trailing suffixes that are implicit (no leaf).
  std::size_t implicit_suffixes() const { return remainder_; }

  // Walks t from the root; true iff t is a substring of the text.
  bool contains(TextView t) const;

  // One line per node, indented by tree depth: id, locus interval as
  // 1-based inclusive positions, and the spelled label.
  std::string dump() const;

 private:
  static constexpr std::size_t kOpen = static_cast<std::size_t>(-1);

  struct Node {
    std::size_t start = 0;
    std::size_t end = 0;  // kOpen for leaves
    std::size_t locus_begin = 0;
    std::size_t depth = 0;  // internal nodes only
    NodeId parent = kNoNode;
    NodeId link = 0;
    std::size_t subtree = 1;
    std::vector<std::pair<Symbol, NodeId>> children;
  };

  const Node& node(NodeId u) const;
  std::size_t edge_length(const Node& n) const;
  NodeId add_node(std::size_t start, std::size_t end, NodeId parent);
  void set_child(NodeId u, Symbol first, NodeId v);
  void grow_from(NodeId u, std::size_t added);

  Symbol sigma_;
  Text text_;
  std::vector<Node> nodes_;
  NodeId active_node_ = 0;
  std::size_t active_edge_ = 0;
  std::size_t active_length_ = 0;
  std::size_t remainder_ = 0;
};

}  // namespace strrec

#endif  // STRREC_SUFFIX_TREE_HPP_
