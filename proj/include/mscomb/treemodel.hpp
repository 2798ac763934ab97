#pragma once

// Explicit lexico trees and twisted lexico trees for small instances.
//
// Node 0 is the root (level 0). A node at level i carries the label a_i of
// every object below it; a root-to-leaf path spells one combination vector.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "reference.hpp"

namespace mscomb {

inline constexpr std::size_t kDefaultTreeNodeLimit = 1'000'000;
inline constexpr std::size_t kDefaultDotNodeLimit = 20'000;

enum class Parity : std::uint8_t { even, odd, none };

inline const char* to_string(Parity p) {
  switch (p) {
    case Parity::even:
      return "even";
    case Parity::odd:
      return "odd";
    default:
      return "none";
  }
}

struct LexTreeNode {
  int label = 0;
  int level = 0;
  Parity parity = Parity::even;
  std::vector<std::size_t> children;
};

class LexTree {
 public:
  LexTree() = default;
  LexTree(int depth, std::vector<LexTreeNode> nodes, bool twisted)
      : depth_(depth), nodes_(std::move(nodes)), twisted_(twisted) {}

  const LexTreeNode& root() const { return nodes_.front(); }
  const LexTreeNode& node(std::size_t id) const { return nodes_.at(id); }
  const std::vector<LexTreeNode>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  int depth() const noexcept { return depth_; }
  bool twisted() const noexcept { return twisted_; }

  std::size_t leaf_count() const {
    std::size_t c = 0;
    for (const auto& v : nodes_) c += (v.level == depth_);
    return c;
  }

 private:
  int depth_ = 0;
  std::vector<LexTreeNode> nodes_;
  bool twisted_ = false;
};

/// The trie of all members with children in ascending label order. Every
/// node starts out even, i.e. nothing is reversed.
inline LexTree build_lexico_tree(const MultisetSpec& spec, std::size_t node_limit = kDefaultTreeNodeLimit) {
  require_valid(spec);
  std::vector<LexTreeNode> nodes(1);
  std::vector<std::size_t> path(static_cast<std::size_t>(spec.n()) + 1, 0);
  std::vector<int> prev;
  lex_visit(spec, [&](const CombinationVector& a) {
    // lex order means a new object shares the longest possible prefix with
    // the previous one, so only the divergent tail needs new nodes
    std::size_t common = 0;
    while (common < prev.size() && prev[common] == a.counts[common]) ++common;
    for (std::size_t lvl = common; lvl < a.size(); ++lvl) {
      if (nodes.size() >= node_limit) throw oracle_limit_error("build_lexico_tree: node limit exceeded");
      LexTreeNode child;
      child.label = a.counts[lvl];
      child.level = static_cast<int>(lvl) + 1;
      nodes.push_back(child);
      nodes[path[lvl]].children.push_back(nodes.size() - 1);
      path[lvl + 1] = nodes.size() - 1;
    }
    prev = a.counts;
    return true;
  });
  return LexTree(spec.n(), std::move(nodes), false);
}

/// Twists top-down: at each level the children of odd nodes are reversed,
/// then parity is handed out over the resulting left-to-right order of the
/// next level. In skip_single_child mode only branching nodes take part in
/// the alternation, except that the first node of every level (the first
/// path) is even and counts.
inline LexTree twist(const LexTree& tree, ParityMode mode) {
  std::vector<LexTreeNode> nodes = tree.nodes();
  for (auto& v : nodes) {
    if (v.children.size() > 1) {
      std::sort(v.children.begin(), v.children.end(),
                [&](std::size_t x, std::size_t y) { return nodes[x].label < nodes[y].label; });
    }
  }
  std::vector<std::size_t> level{0};
  nodes[0].parity = Parity::even;
  while (!level.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t id : level) {
      auto& v = nodes[id];
      if (v.parity == Parity::odd) std::reverse(v.children.begin(), v.children.end());
      next.insert(next.end(), v.children.begin(), v.children.end());
    }
    std::size_t alternation = 0;
    for (std::size_t idx = 0; idx < next.size(); ++idx) {
      auto& v = nodes[next[idx]];
      if (mode == ParityMode::global) {
        v.parity = (idx % 2 == 0) ? Parity::even : Parity::odd;
      } else if (idx == 0) {
        v.parity = Parity::even;
        alternation = 1;
      } else if (v.children.size() < 2) {
        v.parity = Parity::none;
      } else {
        v.parity = (alternation++ % 2 == 0) ? Parity::even : Parity::odd;
      }
    }
    level = std::move(next);
  }
  return LexTree(tree.depth(), std::move(nodes), true);
}

/// Reverses the children of every odd node using the stored parities.
inline LexTree reverse_by_parity(const LexTree& tree) {
  std::vector<LexTreeNode> nodes = tree.nodes();
  for (auto& v : nodes) {
    if (v.parity == Parity::odd) std::reverse(v.children.begin(), v.children.end());
  }
  return LexTree(tree.depth(), std::move(nodes), !tree.twisted());
}

inline GenerationList leaf_sequence(const LexTree& tree) {
  GenerationList out;
  if (tree.size() == 0) return out;
  std::vector<int> labels;
  // explicit stack of (node, next child index)
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    const auto& v = tree.node(id);
    if (v.level == tree.depth()) {
      out.emplace_back(labels);
    }
    if (next < v.children.size()) {
      std::size_t child = v.children[next++];
      labels.push_back(tree.node(child).label);
      stack.emplace_back(child, 0);
    } else {
      stack.pop_back();
      if (!labels.empty() && !stack.empty()) labels.pop_back();
    }
  }
  return out;
}

/// DOT digraph. Node names concatenate the labels along the root path
/// ("r", "r_0", "r_0_2", ...); ordering=out keeps the stored child order.
inline std::string export_dot(const LexTree& tree, std::size_t node_limit = kDefaultDotNodeLimit) {
  if (tree.size() > node_limit) {
    throw oracle_limit_error("export_dot: " + std::to_string(tree.size()) + " nodes exceed rendering limit " +
                             std::to_string(node_limit));
  }
  std::ostringstream os;
  os << "digraph " << (tree.twisted() ? "twisted_lexico_tree" : "lexico_tree") << " {\n";
  os << "  rankdir=LR;\n  ordering=out;\n  node [shape=circle, fontsize=10];\n";
  std::vector<std::string> names(tree.size());
  names[0] = "r";
  std::vector<std::size_t> order{0};
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t id = order[pos];
    const auto& v = tree.node(id);
    const bool leaf = v.level == tree.depth();
    os << "  " << names[id] << " [label=\"" << (id == 0 ? std::string("root") : std::to_string(v.label))
       << "\", level=" << v.level << ", parity=\"" << to_string(v.parity) << "\"";
    if (leaf) {
      os << ", shape=box";
    } else if (v.parity == Parity::none) {
      os << ", shape=circle, width=0.2, fixedsize=true";
    }
    if (v.parity == Parity::odd) os << ", style=filled, fillcolor=black, fontcolor=white";
    os << "];\n";
    for (std::size_t c : v.children) {
      names[c] = names[id] + "_" + std::to_string(tree.node(c).label);
      order.push_back(c);
    }
  }
  for (std::size_t id : order) {
    for (std::size_t c : tree.node(id).children) os << "  " << names[id] << " -> " << names[c] << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mscomb
