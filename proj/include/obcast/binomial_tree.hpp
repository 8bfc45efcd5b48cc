#pragma once

#include <bit>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "obcast/graph.hpp"

namespace obcast {

// Node of a binomial tree. Ids follow the classic scheme: within a tree of
// dimension d the local ids are 0..2^d-1, the parent of u != 0 clears u's
// lowest set bit, and u roots a binomial subtree of dimension countr_zero(u)
// (the root itself has dimension d). Depth equals popcount of the local id.
struct BinomialTreeNode {
  int id = 0;
  int dim = 0;
  std::optional<int> parent;
  std::vector<std::pair<int, int>> children;  // (child id, child dim), dims decreasing
};

// Node table for one dimension-d tree whose ids are shifted by offset.
inline std::vector<BinomialTreeNode> build_binomial_nodes(int d, int offset = 0) {
  const int size = 1 << d;
  std::vector<BinomialTreeNode> nodes(static_cast<std::size_t>(size));
  for (int u = 0; u < size; ++u) {
    BinomialTreeNode& node = nodes[u];
    node.id = offset + u;
    node.dim = (u == 0) ? d : std::countr_zero(static_cast<unsigned>(u));
    if (u != 0) node.parent = offset + (u & (u - 1));
    node.children.reserve(static_cast<std::size_t>(node.dim));
    for (int b = node.dim - 1; b >= 0; --b)
      node.children.emplace_back(offset + (u | (1 << b)), b);
  }
  return nodes;
}

// Removes `count` leaves from the tree stored at nodes[begin..end), each time
// taking a surviving leaf of maximum depth. Ties go to the largest id, which
// is the leaf reached by always descending into the highest-dimension
// surviving child. alive[] and the parents' children sequences are updated
// in place, so the surviving children keep their dimension order.
inline void prune_deepest_leaves(std::vector<BinomialTreeNode>& nodes, std::vector<char>& alive,
                                 int begin, int end, int count) {
  std::vector<int> depth(static_cast<std::size_t>(end - begin), 0);
  for (int u = begin + 1; u < end; ++u) depth[u - begin] = depth[*nodes[u].parent - begin] + 1;
  for (int step = 0; step < count; ++step) {
    int victim = -1;
    for (int u = begin; u < end; ++u) {
      if (!alive[u] || !nodes[u].children.empty()) continue;
      if (victim < 0 || depth[u - begin] >= depth[victim - begin]) victim = u;
    }
    if (victim < 0) throw std::invalid_argument("prune_deepest_leaves: nothing left to remove");
    alive[victim] = 0;
    if (nodes[victim].parent) {
      auto& siblings = nodes[*nodes[victim].parent].children;
      std::erase_if(siblings, [&](const std::pair<int, int>& c) { return c.first == nodes[victim].id; });
    }
  }
}

// Binomial tree of dimension d as a graph: 2^d nodes, 2^d - 1 edges, rooted
// at id 0. Also returns the structural node table.
inline std::tuple<Graph, int, std::vector<BinomialTreeNode>> make_binomial_tree(
    int d, int max_nodes = kDefaultMaxNodes) {
  if (d < 0) throw std::invalid_argument("make_binomial_tree: d must be >= 0");
  if (d >= 31) throw std::length_error("make_binomial_tree: d too large");
  check_node_budget(1LL << d, max_nodes);
  auto nodes = build_binomial_nodes(d);
  Graph g(1 << d, max_nodes);
  for (const auto& node : nodes)
    if (node.parent) g.add_edge(*node.parent, node.id);
  g.finalize();
  return {std::move(g), 0, std::move(nodes)};
}

}  // namespace obcast
