#include "strrec/centroid.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace strrec {

namespace {

bool is_cut(const Component& comp, NodeId v) {
  return std::find(comp.cuts.begin(), comp.cuts.end(), v) != comp.cuts.end();
}

// floor(log2(n)) + 1 for n >= 1.
std::size_t height_limit(std::size_t n) {
  return static_cast<std::size_t>(std::bit_width(n));
}

}  // namespace

TreeIndex TreeIndex::from_parents(const std::vector<NodeId>& parents) {
  if (parents.empty() || parents[0] != kNoNode) {
    throw Error("node 0 must be the root");
  }
  TreeIndex t;
  const std::size_t n = parents.size();
  t.parent_ = parents;
  t.children_.resize(n);
  t.size_.assign(n, 1);
  for (std::size_t u = 1; u < n; ++u) {
    const NodeId p = parents[u];
    if (p < 0 || static_cast<std::size_t>(p) >= u) {
      throw Error("parent of node " + std::to_string(u) +
                  " must be a smaller id");
    }
    t.children_[p].emplace_back(0, static_cast<NodeId>(u));
  }
  for (std::size_t u = n - 1; u >= 1; --u) t.size_[parents[u]] += t.size_[u];
  return t;
}

bool TreeIndex::in_subtree(NodeId u, NodeId v) const {
  if (st_ != nullptr) return st_->in_subtree(u, v);
  // Ancestors have smaller ids.
  while (v > u) v = parent_.at(v);
  return v == u;
}

std::size_t size_below(const TreeIndex& tree, const Component& comp,
                       NodeId v) {
  std::size_t s = tree.subtree_size(v);
  for (NodeId c : comp.cuts) {
    if (tree.in_subtree(v, c)) s -= tree.subtree_size(c);
  }
  return s;
}

std::size_t component_size(const TreeIndex& tree, const Component& comp) {
  return size_below(tree, comp, comp.top);
}

Component child_side(const TreeIndex& tree, const Component& comp,
                     NodeId v) {
  Component out;
  out.top = v;
  for (NodeId c : comp.cuts) {
    if (tree.in_subtree(v, c)) out.cuts.push_back(c);
  }
  return out;
}

Component parent_side(const TreeIndex& tree, const Component& comp,
                      NodeId u) {
  Component out;
  out.top = comp.top;
  for (NodeId c : comp.cuts) {
    if (!tree.in_subtree(u, c)) out.cuts.push_back(c);
  }
  out.cuts.push_back(u);
  return out;
}

namespace {

std::size_t largest_remainder(const TreeIndex& tree, const Component& comp,
                              NodeId x, std::size_t m) {
  std::size_t largest = m - size_below(tree, comp, x);
  for (const auto& [sym, y] : tree.children(x)) {
    if (!is_cut(comp, y)) largest = std::max(largest, size_below(tree, comp, y));
  }
  return largest;
}

}  // namespace

CentroidChoice find_centroid(const TreeIndex& tree, const Component& comp) {
  const std::size_t m = component_size(tree, comp);
  NodeId x = comp.top;
  NodeId heavy = kNoNode;
  std::size_t heavy_size = 0;
  for (;;) {
    heavy = kNoNode;
    heavy_size = 0;
    for (const auto& [sym, y] : tree.children(x)) {
      if (is_cut(comp, y)) continue;
      const std::size_t s = size_below(tree, comp, y);
      if (s > heavy_size) {
        heavy = y;
        heavy_size = s;
      }
    }
    if (2 * heavy_size > m) {
      x = heavy;
    } else {
      break;
    }
  }
  // A second centroid exists only when one piece holds exactly half.
  NodeId chosen = x;
  if (m % 2 == 0) {
    if (heavy != kNoNode && 2 * heavy_size == m) {
      chosen = std::min(x, heavy);
    } else if (x != comp.top &&
               2 * (m - size_below(tree, comp, x)) == m) {
      chosen = std::min(x, tree.parent(x));
    }
  }
  return {chosen, m, largest_remainder(tree, comp, chosen, m)};
}

CentroidTree::CentroidTree(const TreeIndex& tree)
    : parent_(tree.size(), kNoNode),
      children_(tree.size()),
      level_(tree.size(), 0),
      comp_size_(tree.size(), 0),
      remainder_(tree.size(), 0) {
  struct Pending {
    Component comp;
    NodeId ct_parent;
  };
  std::deque<Pending> queue;
  queue.push_back({Component{tree.root(), {}}, kNoNode});
  while (!queue.empty()) {
    Pending p = std::move(queue.front());
    queue.pop_front();
    const CentroidChoice c = find_centroid(tree, p.comp);
    const NodeId u = c.node;
    parent_[u] = p.ct_parent;
    comp_size_[u] = c.component_size;
    remainder_[u] = c.largest_remainder;
    if (p.ct_parent == kNoNode) {
      root_ = u;
      level_[u] = 0;
    } else {
      level_[u] = level_[p.ct_parent] + 1;
      children_[p.ct_parent].push_back(u);
    }
    height_ = std::max(height_, level_[u] + 1);
    if (u != p.comp.top) {
      queue.push_back({parent_side(tree, p.comp, u), u});
    }
    for (const auto& [sym, v] : tree.children(u)) {
      if (!is_cut(p.comp, v)) queue.push_back({child_side(tree, p.comp, v), u});
    }
  }
}

CentroidTree centroid_decompose(const SuffixTree& st) {
  return CentroidTree(TreeIndex(st));
}

std::optional<NodeId> CentroidTree::component_of(NodeId u, NodeId v) const {
  if (u < 0 || static_cast<std::size_t>(u) >= parent_.size() || v < 0 ||
      static_cast<std::size_t>(v) >= parent_.size()) {
    throw Error("unknown node in component lookup");
  }
  if (u == v) return std::nullopt;
  for (NodeId w = v; w != kNoNode; w = parent_[w]) {
    if (parent_[w] == u) return w;
  }
  return std::nullopt;
}

std::string CentroidTree::dump(const SuffixTree& st) const {
  std::ostringstream out;
  if (root_ == kNoNode) return {};
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    out << std::string(2 * level_[u], ' ') << u;
    if (u == st.root()) {
      out << " root";
    } else {
      const Interval iv = st.locus_interval(u);
      out << " [" << iv.begin + 1 << "," << iv.end << "] "
          << to_letters(st.locus(u));
    }
    out << " (component " << comp_size_[u] << ")\n";
    for (auto it = children_[u].rbegin(); it != children_[u].rend(); ++it) {
      stack.push_back(*it);
    }
  }
  return out.str();
}

std::optional<std::string> check_decomposition(const TreeIndex& tree,
                                               const CentroidTree& ct) {
  const std::size_t n = tree.size();
  if (ct.node_count() != n) return "node count mismatch";
  std::vector<int> seen(n, 0);
  std::vector<NodeId> stack{ct.root()};
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    if (++seen[u] > 1) return "node " + std::to_string(u) + " repeated";
    if (ct.largest_remainder(u) > ct.component_size(u) / 2) {
      return "centroid " + std::to_string(u) + " leaves a piece of " +
             std::to_string(ct.largest_remainder(u)) + " out of " +
             std::to_string(ct.component_size(u));
    }
    std::size_t child_total = 0;
    for (NodeId w : ct.children(u)) {
      child_total += ct.component_size(w);
      stack.push_back(w);
    }
    if (child_total + 1 != ct.component_size(u)) {
      return "pieces under " + std::to_string(u) + " do not partition";
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (seen[u] != 1) return "node " + std::to_string(u) + " missing";
  }
  if (ct.height() > height_limit(n)) {
    return "height " + std::to_string(ct.height()) + " exceeds " +
           std::to_string(height_limit(n));
  }
  return std::nullopt;
}

NodeId FullNavigator::toward_child(NodeId u, NodeId v) {
  return ct_.component_of(u, v).value_or(kNoNode);
}

NodeId FullNavigator::toward_parent(NodeId u) {
  const NodeId p = tree_.parent(u);
  if (p == kNoNode) return kNoNode;
  return ct_.component_of(u, p).value_or(kNoNode);
}

NodeId LazyNavigator::select() {
  const CentroidChoice c = find_centroid(tree_, current_);
  ++visits_;
  if (audit_ != nullptr) {
    ++audit_->selections;
    if (c.largest_remainder > c.component_size / 2) {
      ++audit_->selection_violations;
    }
    if (visits_ > height_limit(tree_.size())) ++audit_->depth_violations;
  }
  return c.node;
}

NodeId LazyNavigator::start() {
  current_ = Component{tree_.root(), {}};
  visits_ = 0;
  if (audit_ != nullptr) ++audit_->searches;
  return select();
}

NodeId LazyNavigator::toward_child(NodeId u, NodeId v) {
  (void)u;
  if (is_cut(current_, v)) return kNoNode;
  current_ = child_side(tree_, current_, v);
  return select();
}

NodeId LazyNavigator::toward_parent(NodeId u) {
  if (u == current_.top) return kNoNode;
  current_ = parent_side(tree_, current_, u);
  return select();
}

}  // namespace strrec
