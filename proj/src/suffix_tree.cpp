#include "strrec/suffix_tree.hpp"

#include <algorithm>
#include <sstream>

namespace strrec {

namespace {

auto symbol_less = [](const std::pair<Symbol, NodeId>& e, Symbol s) {
  return e.first < s;
};

}  // namespace

SuffixTree::SuffixTree(Symbol sigma) : sigma_(sigma) {
  if (sigma < 1) throw Error("suffix tree needs sigma >= 1");
  nodes_.emplace_back();  // root
}

const SuffixTree::Node& SuffixTree::node(NodeId u) const {
  if (u < 0 || static_cast<std::size_t>(u) >= nodes_.size()) {
    throw Error("unknown suffix tree node " + std::to_string(u));
  }
  return nodes_[u];
}

std::size_t SuffixTree::edge_length(const Node& n) const {
  return (n.end == kOpen ? text_.size() : n.end) - n.start;
}

NodeId SuffixTree::add_node(std::size_t start, std::size_t end,
                            NodeId parent) {
  Node n;
  n.start = start;
  n.end = end;
  n.parent = parent;
  n.locus_begin = start - nodes_[parent].depth;
  if (end != kOpen) n.depth = nodes_[parent].depth + (end - start);
  nodes_.push_back(std::move(n));
  return static_cast<NodeId>(nodes_.size() - 1);
}

void SuffixTree::grow_from(NodeId u, std::size_t added) {
  for (; u != kNoNode; u = nodes_[u].parent) nodes_[u].subtree += added;
}

bool SuffixTree::in_subtree(NodeId u, NodeId v) const {
  node(u);
  node(v);
  if (u == root()) return true;
  const std::size_t d = depth(u);
  while (v != kNoNode && depth(v) > d) v = nodes_[v].parent;
  return v == u;
}

void SuffixTree::set_child(NodeId u, Symbol first, NodeId v) {
  auto& ch = nodes_[u].children;
  auto it = std::lower_bound(ch.begin(), ch.end(), first, symbol_less);
  if (it != ch.end() && it->first == first) {
    it->second = v;
  } else {
    ch.insert(it, {first, v});
  }
}

NodeId SuffixTree::child(NodeId u, Symbol first) const {
  const auto& ch = node(u).children;
  auto it = std::lower_bound(ch.begin(), ch.end(), first, symbol_less);
  return (it != ch.end() && it->first == first) ? it->second : kNoNode;
}

void SuffixTree::append(Symbol c) {
  if (c < 1 || c > sigma_) {
    throw Error("symbol " + std::to_string(c) + " outside [1.." +
                std::to_string(sigma_) + "]");
  }
  text_.push_back(c);
  const std::size_t pos = text_.size() - 1;
  ++remainder_;
  NodeId last_new = kNoNode;

  while (remainder_ > 0) {
    if (active_length_ == 0) active_edge_ = pos;
    const Symbol first = text_[active_edge_];
    const NodeId next = child(active_node_, first);
    if (next == kNoNode) {
      const NodeId leaf = add_node(pos, kOpen, active_node_);
      set_child(active_node_, first, leaf);
      grow_from(active_node_, 1);
      if (last_new != kNoNode) {
        nodes_[last_new].link = active_node_;
        last_new = kNoNode;
      }
    } else {
      const std::size_t len = edge_length(nodes_[next]);
      if (active_length_ >= len) {
        active_edge_ += len;
        active_length_ -= len;
        active_node_ = next;
        continue;
      }
      if (text_[nodes_[next].start + active_length_] == c) {
        if (last_new != kNoNode && active_node_ != root()) {
          nodes_[last_new].link = active_node_;
        }
        ++active_length_;
        break;
      }
      const std::size_t split_start = nodes_[next].start;
      const NodeId mid =
          add_node(split_start, split_start + active_length_, active_node_);
      set_child(active_node_, first, mid);
      const NodeId leaf = add_node(pos, kOpen, mid);
      set_child(mid, c, leaf);
      nodes_[next].start += active_length_;
      nodes_[next].parent = mid;
      set_child(mid, text_[nodes_[next].start], next);
      nodes_[mid].subtree = nodes_[next].subtree + 2;
      grow_from(active_node_, 2);
      if (last_new != kNoNode) nodes_[last_new].link = mid;
      last_new = mid;
    }
    --remainder_;
    if (active_node_ == root() && active_length_ > 0) {
      --active_length_;
      active_edge_ = pos - remainder_ + 1;
    } else if (active_node_ != root()) {
      active_node_ = nodes_[active_node_].link;
    }
  }
}

std::size_t SuffixTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin() + 1, nodes_.end(),
                    [](const Node& n) { return n.end == kOpen; }));
}

std::size_t SuffixTree::depth(NodeId u) const {
  const Node& n = node(u);
  return n.end == kOpen ? text_.size() - n.locus_begin : n.depth;
}

Interval SuffixTree::locus_interval(NodeId u) const {
  const Node& n = node(u);
  return {n.locus_begin, n.locus_begin + depth(u)};
}

TextView SuffixTree::locus(NodeId u) const {
  const Interval iv = locus_interval(u);
  return TextView(text_).subspan(iv.begin, iv.length());
}

Interval SuffixTree::edge_interval(NodeId u) const {
  const Node& n = node(u);
  return {n.start, n.start + edge_length(n)};
}

bool SuffixTree::contains(TextView t) const {
  NodeId u = root();
  std::size_t i = 0;
  while (i < t.size()) {
    const NodeId v = child(u, t[i]);
    if (v == kNoNode) return false;
    const Interval e = edge_interval(v);
    for (std::size_t k = e.begin; k < e.end && i < t.size(); ++k, ++i) {
      if (text_[k] != t[i]) return false;
    }
    u = v;
  }
  return true;
}

std::string SuffixTree::dump() const {
  std::ostringstream out;
  std::vector<std::pair<NodeId, std::size_t>> stack{{root(), 0}};
  while (!stack.empty()) {
    const auto [u, level] = stack.back();
    stack.pop_back();
    out << std::string(2 * level, ' ') << u;
    if (u == root()) {
      out << " root\n";
    } else {
      const Interval iv = locus_interval(u);
      out << " [" << iv.begin + 1 << "," << iv.end << "] "
          << to_letters(locus(u)) << (is_leaf(u) ? " leaf" : "") << "\n";
    }
    const auto& ch = nodes_[u].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
      stack.emplace_back(it->second, level + 1);
    }
  }
  return out.str();
}

}  // namespace strrec
