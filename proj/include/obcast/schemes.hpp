#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "obcast/binomial_tree.hpp"
#include "obcast/graph.hpp"
#include "obcast/lists.hpp"

namespace obcast {

// Hypercube with the canonical dimension-order lists: every node calls its
// dimension-1 neighbor first, then dimension 2, and so on. Worst-source
// completion is exactly d under full end-of-round acknowledgements.
inline std::pair<Graph, ListAssignment> hypercube_lists(int d, int max_nodes = kDefaultMaxNodes) {
  Graph g = make_hypercube(d, max_nodes);
  ListAssignment lists;
  lists.lists.resize(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    lists.lists[v].reserve(static_cast<std::size_t>(d));
    for (int j = 1; j <= d; ++j) lists.lists[v].push_back(v ^ (1 << (d - j)));
  }
  return {std::move(g), std::move(lists)};
}

// Decomposition n = 2^(m-d_1) + ... + 2^(m-d_k) with 1 = d_1 < ... < d_k <= m
// and m = ceil(log2 n), read off the binary expansion of n. Defined only for
// n >= 2 that are not powers of two.
struct Theorem1Spec {
  int n = 0;
  int m = 0;
  std::vector<int> dims;
};

inline Theorem1Spec theorem1_spec(int n) {
  if (n < 2) throw std::invalid_argument("theorem1_spec: n must be >= 2");
  if (is_power_of_two(n))
    throw std::invalid_argument("theorem1_spec: n is a power of two; use hypercube_lists");
  Theorem1Spec spec;
  spec.n = n;
  spec.m = ceil_log2(n);
  for (int j = 1; j <= spec.m; ++j)
    if (n >> (spec.m - j) & 1) spec.dims.push_back(j);
  return spec;
}

// Union of labeled sub-hypercubes covering n nodes. The cube for d_i carries
// the m-bit labels with d_i - 1 leading 1s followed by a 0; any two labels at
// Hamming distance one are joined, so the result is an induced subgraph of
// the m-cube with at most n*m/2 edges. A node's list walks dimensions
// d_i+1..m then 1..d_i; dimensions whose flipped label is not a node are
// dropped at construction time, leaving the runtime skip rule purely about
// informedness. Node ids are ranks in increasing label order.
inline std::pair<Graph, ListAssignment> theorem1_construction(int n,
                                                              int max_nodes = kDefaultMaxNodes) {
  const Theorem1Spec spec = theorem1_spec(n);
  const int m = spec.m;
  check_node_budget(n, max_nodes);

  std::vector<std::uint32_t> value_of;  // node id -> label value, bit m-1 leftmost
  std::vector<int> dim_class;           // node id -> its d_i
  value_of.reserve(static_cast<std::size_t>(n));
  dim_class.reserve(static_cast<std::size_t>(n));
  std::vector<int> id_of(std::size_t{1} << m, -1);
  for (int d : spec.dims) {
    const std::uint32_t prefix =
        d > 1 ? ((std::uint32_t{1} << (d - 1)) - 1) << (m - d + 1) : 0;
    for (std::uint32_t suffix = 0; suffix < (std::uint32_t{1} << (m - d)); ++suffix) {
      const std::uint32_t value = prefix | suffix;
      id_of[value] = static_cast<int>(value_of.size());
      value_of.push_back(value);
      dim_class.push_back(d);
    }
  }
  if (static_cast<int>(value_of.size()) != n)
    throw std::logic_error("theorem1_construction: node count mismatch");

  Graph g(n, max_nodes);
  g.labels.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::string label(static_cast<std::size_t>(m), '0');
    for (int j = 1; j <= m; ++j)
      if (value_of[v] >> (m - j) & 1) label[j - 1] = '1';
    g.labels[v] = std::move(label);
    for (int b = 0; b < m; ++b) {
      const int w = id_of[value_of[v] ^ (std::uint32_t{1} << b)];
      if (w > v) g.add_edge(v, w);
    }
  }
  g.finalize();

  ListAssignment lists;
  lists.lists.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const int d = dim_class[v];
    auto emit = [&](int j) {
      const int w = id_of[value_of[v] ^ (std::uint32_t{1} << (m - j))];
      if (w >= 0) lists.lists[v].push_back(w);
    };
    for (int j = d + 1; j <= m; ++j) emit(j);
    for (int j = 1; j <= d; ++j) emit(j);
  }
  return {std::move(g), std::move(lists)};
}

// Parameters of n = 2^m - 2^k - r with m = ceil(log2 n), 0 <= k <= m-2 and
// 0 <= r <= 2^k - 1. Defined for n >= 3 that are not powers of two.
struct Theorem2Decomposition {
  int m = 0;
  int k = 0;
  int r = 0;
};

inline Theorem2Decomposition theorem2_decompose(int n) {
  if (n < 3) throw std::invalid_argument("theorem2_decompose: n must be >= 3");
  if (is_power_of_two(n))
    throw std::invalid_argument("theorem2_decompose: n is a power of two; use hypercube_lists");
  Theorem2Decomposition dec;
  dec.m = ceil_log2(n);
  const int gap = (1 << dec.m) - n;  // in [1, 2^(m-1))
  dec.k = std::bit_width(static_cast<unsigned>(gap)) - 1;
  dec.r = gap - (1 << dec.k);
  return dec;
}

// Forest of m-k binomial trees of dimensions m-1, m-2, ..., k, the smallest
// pruned by its r deepest leaves, plus an edge from every vertex to every
// tree root. Every vertex roots some binomial subtree; its list names the
// existing roots from the largest tree down to its own subtree dimension
// (self omitted for roots), then its surviving children in decreasing
// dimension order. Node ids are assigned tree by tree, largest first, and
// compacted after pruning.
inline std::pair<Graph, ListAssignment> theorem2_construction(int n,
                                                              int max_nodes = kDefaultMaxNodes) {
  const Theorem2Decomposition dec = theorem2_decompose(n);
  const int m = dec.m, k = dec.k, r = dec.r;
  check_node_budget(n, max_nodes);

  std::vector<BinomialTreeNode> nodes;
  std::vector<int> root_ids;  // roots of the dimension m-1, m-2, ..., k trees
  for (int d = m - 1; d >= k; --d) {
    const int offset = static_cast<int>(nodes.size());
    auto tree = build_binomial_nodes(d, offset);
    root_ids.push_back(offset);
    nodes.insert(nodes.end(), std::make_move_iterator(tree.begin()),
                 std::make_move_iterator(tree.end()));
  }
  const int total = static_cast<int>(nodes.size());  // 2^m - 2^k
  std::vector<char> alive(static_cast<std::size_t>(total), 1);
  if (r > 0) prune_deepest_leaves(nodes, alive, root_ids.back(), total, r);

  std::vector<int> new_id(static_cast<std::size_t>(total), -1);
  int next = 0;
  for (int u = 0; u < total; ++u)
    if (alive[u]) new_id[u] = next++;
  if (next != n) throw std::logic_error("theorem2_construction: node count mismatch");

  std::vector<std::pair<int, int>> edge_list;
  const auto add = [&](int a, int b) {
    edge_list.emplace_back(std::min(a, b), std::max(a, b));
  };
  for (int u = 0; u < total; ++u) {
    if (!alive[u]) continue;
    if (nodes[u].parent) add(new_id[*nodes[u].parent], new_id[u]);
    for (int root : root_ids)
      if (root != u) add(new_id[root], new_id[u]);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());

  Graph g(n, max_nodes);
  for (const auto& [a, b] : edge_list) g.add_edge(a, b);
  g.finalize();

  ListAssignment lists;
  lists.lists.resize(static_cast<std::size_t>(n));
  for (int u = 0; u < total; ++u) {
    if (!alive[u]) continue;
    auto& out = lists.lists[new_id[u]];
    const int lowest_root_index = std::max(nodes[u].dim, k);
    for (std::size_t q = 0; q < root_ids.size(); ++q) {
      const int index = m - 1 - static_cast<int>(q);
      if (index < lowest_root_index) break;
      if (root_ids[q] == u) continue;  // a root never lists itself
      out.push_back(new_id[root_ids[q]]);
    }
    for (const auto& [child, child_dim] : nodes[u].children)
      if (alive[child]) out.push_back(new_id[child]);
  }
  return {std::move(g), std::move(lists)};
}

// Complete graph with lists giving ceil(log2 n)-round broadcast from every
// source: dimension lists when n is a power of two, otherwise the
// hypercube-union lists carried over node ids unchanged (every entry is
// adjacent in the clique, so the lists stay valid and the simulation only
// ever follows them).
inline std::pair<Graph, ListAssignment> clique_lists(int n, int max_nodes = kDefaultMaxNodes) {
  Graph g = make_clique(n, max_nodes);
  ListAssignment lists;
  if (n == 1) {
    lists.lists.resize(1);
  } else if (is_power_of_two(n)) {
    lists = hypercube_lists(ceil_log2(n), max_nodes).second;
  } else {
    lists = theorem1_construction(n, max_nodes).second;
  }
  return {std::move(g), std::move(lists)};
}

}  // namespace obcast
