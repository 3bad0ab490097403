#ifndef STRREC_CENTROID_HPP_
#define STRREC_CENTROID_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strrec/suffix_tree.hpp"

namespace strrec {

// Topology queries over a tree. Over a suffix tree the answers come from
// the tree itself, so the view stays valid as the tree grows. Children come
// in symbol order (id order for trees given by parent arrays).
class TreeIndex {
 public:
  using ChildList = std::vector<std::pair<Symbol, NodeId>>;

  explicit TreeIndex(const SuffixTree& st) : st_(&st) {}
  // parents[0] must be kNoNode and every other parent a smaller id.
  static TreeIndex from_parents(const std::vector<NodeId>& parents);

  std::size_t size() const {
    return st_ != nullptr ? st_->node_count() : parent_.size();
  }
  NodeId root() const { return 0; }
  NodeId parent(NodeId u) const {
    return st_ != nullptr ? st_->parent(u) : parent_.at(u);
  }
  const ChildList& children(NodeId u) const {
    return st_ != nullptr ? st_->children(u) : children_.at(u);
  }
  std::size_t subtree_size(NodeId u) const {
    return st_ != nullptr ? st_->subtree_size(u) : size_.at(u);
  }
  // True iff v lies in the subtree rooted at u (u included).
  bool in_subtree(NodeId u, NodeId v) const;

 private:
  TreeIndex() = default;

  const SuffixTree* st_ = nullptr;
  std::vector<NodeId> parent_;
  std::vector<ChildList> children_;
  std::vector<std::size_t> size_;
};

// A connected piece of the tree met during decomposition: the subtree of
// `top` minus the subtrees of `cuts`. Cuts are pairwise disjoint and lie
// strictly inside the subtree of top.
struct Component {
  NodeId top = 0;
  std::vector<NodeId> cuts;
};

std::size_t component_size(const TreeIndex& tree, const Component& comp);

// Size of the piece of `comp` hanging below v (v included).
std::size_t size_below(const TreeIndex& tree, const Component& comp, NodeId v);

// The component left on v's side after removing the subtree above it, and
// the component left above after removing the subtree of u.
Component child_side(const TreeIndex& tree, const Component& comp, NodeId v);
Component parent_side(const TreeIndex& tree, const Component& comp, NodeId u);

struct CentroidChoice {
  NodeId node = kNoNode;
  std::size_t component_size = 0;
  // Largest piece left after removing `node`.
  std::size_t largest_remainder = 0;
};

// Of all nodes whose removal leaves pieces of at most floor(m/2) nodes, the
// one with the smallest id.
CentroidChoice find_centroid(const TreeIndex& tree, const Component& comp);

// Full recursive decomposition of every node of the tree.
class CentroidTree {
 public:
  explicit CentroidTree(const TreeIndex& tree);

  NodeId root() const { return root_; }
  std::size_t node_count() const { return parent_.size(); }
  NodeId parent(NodeId u) const { return parent_.at(u); }
  // The piece containing u's tree parent (if any) comes first, then the
  // pieces under u's tree children in symbol order.
  const std::vector<NodeId>& children(NodeId u) const {
    return children_.at(u);
  }
  std::size_t level(NodeId u) const { return level_.at(u); }
  // Size of the component u was chosen from.
  std::size_t component_size(NodeId u) const { return comp_size_.at(u); }
  std::size_t largest_remainder(NodeId u) const { return remainder_.at(u); }
  // Number of levels, so a single node has height 1.
  std::size_t height() const { return height_; }

  // The child of u whose component contains v; empty if v == u or v lies
  // outside u's component.
  std::optional<NodeId> component_of(NodeId u, NodeId v) const;

  std::string dump(const SuffixTree& st) const;

 private:
  NodeId root_ = kNoNode;
  std::vector<NodeId> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<std::size_t> level_;
  std::vector<std::size_t> comp_size_;
  std::vector<std::size_t> remainder_;
  std::size_t height_ = 0;
};

CentroidTree centroid_decompose(const SuffixTree& st);

// Checks the decomposition invariants: every node present exactly once,
// every removal leaves pieces of at most half the component, and height at
// most floor(log2(nodes)) + 1. Returns a description of the first violation.
std::optional<std::string> check_decomposition(const TreeIndex& tree,
                                               const CentroidTree& ct);

// Walks the centroid tree during a phrase search. Implementations must visit
// the same nodes for the same answers.
class CentroidNavigator {
 public:
  virtual ~CentroidNavigator() = default;
  virtual NodeId start() = 0;
  // Next centroid in the piece of the current component that contains tree
  // child `v` of u; kNoNode if v is not in the current component.
  virtual NodeId toward_child(NodeId u, NodeId v) = 0;
  // Next centroid in the piece containing u's tree parent; kNoNode if none.
  virtual NodeId toward_parent(NodeId u) = 0;
};

class FullNavigator : public CentroidNavigator {
 public:
  FullNavigator(const TreeIndex& tree, const CentroidTree& ct)
      : tree_(tree), ct_(ct) {}
  NodeId start() override { return ct_.root(); }
  NodeId toward_child(NodeId u, NodeId v) override;
  NodeId toward_parent(NodeId u) override;

 private:
  const TreeIndex& tree_;
  const CentroidTree& ct_;
};

struct CentroidAudit {
  std::size_t selections = 0;
  std::size_t selection_violations = 0;
  std::size_t searches = 0;
  std::size_t depth_violations = 0;
  std::size_t decompositions = 0;
  std::size_t decomposition_violations = 0;
};

// Computes only the centroids a search actually reaches, one component at
// a time. Produces the same visiting sequence as FullNavigator over a full
// decomposition of the same tree.
class LazyNavigator : public CentroidNavigator {
 public:
  explicit LazyNavigator(const TreeIndex& tree, CentroidAudit* audit = nullptr)
      : tree_(tree), audit_(audit) {}
  NodeId start() override;
  NodeId toward_child(NodeId u, NodeId v) override;
  NodeId toward_parent(NodeId u) override;

 private:
  NodeId select();

  const TreeIndex& tree_;
  CentroidAudit* audit_;
  Component current_;
  std::size_t visits_ = 0;
};

}  // namespace strrec

#endif  // STRREC_CENTROID_HPP_
