#pragma once

// Recursion-tree capture for the generators and Graphviz DOT export.
// Internal nodes are labeled with the prefix (RGC) or suffix (Co-RGC) owned
// by the call; leaves carry the emitted sequence.

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "rgs/gen_prefix.hpp"
#include "rgs/gen_suffix.hpp"

namespace rgs {

struct TreeNode {
  std::string label;
  std::vector<std::size_t> children;  // in call order
  bool leaf = false;
};

struct RecursionTree {
  std::vector<TreeNode> nodes;  // preorder; nodes[0] is the root
  std::size_t leaf_count = 0;

  std::size_t root_degree() const {
    return nodes.empty() ? 0 : nodes[0].children.size();
  }
};

namespace detail {

inline std::string tree_label(SeqView s) {
  if (s.empty()) return "\xce\xb5";  // epsilon
  bool compact = true;
  for (Digit d : s) compact = compact && d >= 0 && d <= 9;
  return compact ? compact_string(s) : spaced_string(s);
}

struct TreeObserver {
  RecursionTree* tree;
  std::vector<std::size_t> stack;

  void enter(int, SeqView view) {
    const std::size_t id = tree->nodes.size();
    tree->nodes.push_back(TreeNode{tree_label(view), {}, false});
    if (!stack.empty()) tree->nodes[stack.back()].children.push_back(id);
    stack.push_back(id);
  }
  void leave() { stack.pop_back(); }
};

}  // namespace detail

inline RecursionTree build_recursion_tree(ClassId cls, OrderId order, int n) {
  RecursionTree tree;
  detail::TreeObserver observe{&tree, {}};
  auto visit = [&](SeqView s) {
    TreeNode& node = tree.nodes[observe.stack.back()];
    node.leaf = true;
    node.label = detail::tree_label(s);
    ++tree.leaf_count;
  };
  if (order == OrderId::Rgc)
    gen_rgc(cls, n, visit, observe);
  else
    gen_corgc(cls, n, visit, observe);
  return tree;
}

inline void write_dot(std::ostream& os, const RecursionTree& tree,
                      const std::string& graph_name) {
  os << "digraph " << graph_name << " {\n";
  os << "  node [fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const TreeNode& node = tree.nodes[i];
    os << "  n" << i << " [label=\"" << node.label << '"';
    if (node.leaf) os << ", shape=box";
    os << "];\n";
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    for (std::size_t child : tree.nodes[i].children)
      os << "  n" << i << " -> n" << child << ";\n";
  os << "}\n";
}

}  // namespace rgs
