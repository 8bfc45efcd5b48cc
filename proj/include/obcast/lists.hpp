#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "obcast/graph.hpp"

namespace obcast {

// Per-node ordered call lists (universal lists): each node owns one ordered
// sequence of distinct neighbors, followed regardless of where a broadcast
// started. Lists may be shorter than the full neighborhood.
struct ListAssignment {
  std::vector<std::vector<int>> lists;

  bool operator==(const ListAssignment&) const = default;

  int size() const { return static_cast<int>(lists.size()); }

  // Throws unless there is one list per node and every list holds distinct
  // neighbors of its node.
  void validate(const Graph& g) const {
    if (size() != g.n) throw std::invalid_argument("ListAssignment: size mismatch");
    std::vector<int> sorted;
    for (int v = 0; v < g.n; ++v) {
      for (int u : lists[v])
        if (!g.has_edge(v, u))
          throw std::invalid_argument("ListAssignment: list of node " + std::to_string(v) +
                                      " contains non-neighbor " + std::to_string(u));
      sorted = lists[v];
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("ListAssignment: duplicate entry in list of node " +
                                    std::to_string(v));
    }
  }
};

// Rooted spanning tree with a total order on every node's children: the
// order in which a node calls its children.
struct OrderedBroadcastTree {
  int root = 0;
  std::vector<std::vector<int>> children;
};

// Universal lists that replay an ordered broadcast tree: the root calls its
// children in order; every other node calls its parent first, then its
// children in order. Under end-of-round acknowledgements the parent entry is
// skipped on the way down, so the worst source costs at most one climb plus
// one full descent.
inline ListAssignment lists_from_broadcast_tree(const Graph& g, const OrderedBroadcastTree& tree) {
  if (static_cast<int>(tree.children.size()) != g.n)
    throw std::invalid_argument("lists_from_broadcast_tree: children table size mismatch");
  if (!g.has_node(tree.root)) throw std::invalid_argument("lists_from_broadcast_tree: bad root");
  std::vector<int> parent(static_cast<std::size_t>(g.n), -1);
  for (int v = 0; v < g.n; ++v)
    for (int c : tree.children[v]) {
      if (!g.has_edge(v, c))
        throw std::invalid_argument("lists_from_broadcast_tree: tree edge not in graph");
      if (c == tree.root || parent[c] != -1)
        throw std::invalid_argument("lists_from_broadcast_tree: node with two parents");
      parent[c] = v;
    }
  int reached = 1;
  std::vector<int> stack{tree.root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int c : tree.children[v]) {
      ++reached;
      stack.push_back(c);
    }
  }
  if (reached != g.n)
    throw std::invalid_argument("lists_from_broadcast_tree: tree does not span the graph");

  ListAssignment out;
  out.lists.resize(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    auto& list = out.lists[v];
    list.reserve(tree.children[v].size() + 1);
    if (v != tree.root) list.push_back(parent[v]);
    list.insert(list.end(), tree.children[v].begin(), tree.children[v].end());
  }
  return out;
}

}  // namespace obcast
