#pragma once

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace obcast {

// Hard cap on constructed graph sizes: exceeding it is an explicit error so
// that sweeps fail loudly instead of thrashing.
inline constexpr int kDefaultMaxNodes = 1 << 20;

// ceil(log2 n) for n >= 1. The informed set can at most double per round, so
// this is the round lower bound for broadcast on any n-node graph.
inline int ceil_log2(int n) {
  if (n < 1) throw std::invalid_argument("ceil_log2: n must be >= 1");
  return std::bit_width(static_cast<unsigned>(n - 1));
}

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

inline void check_node_budget(long long n, int max_nodes) {
  if (n > max_nodes)
    throw std::length_error("requested graph size " + std::to_string(n) +
                            " exceeds the node cap " + std::to_string(max_nodes));
}

// Simple undirected graph over dense node ids 0..n-1. Adjacency lists are
// kept sorted and mirror the edge set exactly. labels, when non-empty, carry
// one bit string per node (used by the hypercube-derived families); labels
// are metadata, node identity is always the integer id.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::string> labels;

  Graph() = default;
  explicit Graph(int node_count, int max_nodes = kDefaultMaxNodes) : n(node_count) {
    if (node_count < 0) throw std::invalid_argument("Graph: negative node count");
    check_node_budget(node_count, max_nodes);
    adj.resize(static_cast<std::size_t>(node_count));
  }

  bool has_node(int v) const { return v >= 0 && v < n; }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  long long edge_count() const {
    long long total = 0;
    for (const auto& nb : adj) total += static_cast<long long>(nb.size());
    return total / 2;
  }

  bool has_edge(int u, int v) const {
    if (!has_node(u) || !has_node(v)) return false;
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  }

  void add_edge(int u, int v) {
    if (!has_node(u) || !has_node(v))
      throw std::invalid_argument("add_edge: endpoint out of range");
    if (u == v) throw std::invalid_argument("add_edge: self-loop rejected");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  // Sorts adjacency and rejects duplicate edges. Call once after add_edge.
  void finalize() {
    for (auto& nb : adj) {
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
        throw std::invalid_argument("finalize: duplicate edge");
    }
  }

  // Edge list as sorted (u, v) pairs with u < v.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n; ++u)
      for (int v : adj[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool is_connected() const {
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == n;
  }

  // Recheck every structural invariant: sorted symmetric adjacency with no
  // self-loops or duplicates, and label consistency (one per node, distinct,
  // equal length, every edge joining labels that differ in exactly one bit).
  void validate() const {
    if (static_cast<int>(adj.size()) != n)
      throw std::invalid_argument("validate: adjacency size mismatch");
    for (int u = 0; u < n; ++u) {
      const auto& nb = adj[u];
      for (std::size_t i = 0; i < nb.size(); ++i) {
        const int v = nb[i];
        if (v < 0 || v >= n) throw std::invalid_argument("validate: neighbor out of range");
        if (v == u) throw std::invalid_argument("validate: self-loop");
        if (i > 0 && nb[i - 1] >= v)
          throw std::invalid_argument("validate: adjacency not strictly sorted");
        if (!has_edge(v, u)) throw std::invalid_argument("validate: asymmetric adjacency");
      }
    }
    if (labels.empty()) return;
    if (static_cast<int>(labels.size()) != n)
      throw std::invalid_argument("validate: label count mismatch");
    for (int v = 1; v < n; ++v)
      if (labels[v].size() != labels[0].size())
        throw std::invalid_argument("validate: labels of unequal length");
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("validate: duplicate labels");
    for (int u = 0; u < n; ++u)
      for (int v : adj[u]) {
        if (u > v) continue;
        int diff = 0;
        for (std::size_t i = 0; i < labels[u].size(); ++i) diff += labels[u][i] != labels[v][i];
        if (diff != 1)
          throw std::invalid_argument("validate: edge labels differ in " + std::to_string(diff) +
                                      " bits");
      }
  }
};

// d-dimensional hypercube. Node i is labeled with the d-bit string of i,
// most significant character first; dimension j (1-based) flips character
// j-1 of the label, i.e. bit d-j of the id.
inline Graph make_hypercube(int d, int max_nodes = kDefaultMaxNodes) {
  if (d < 0) throw std::invalid_argument("make_hypercube: d must be >= 0");
  if (d >= 31) throw std::length_error("make_hypercube: d too large");
  check_node_budget(1LL << d, max_nodes);
  Graph g(1 << d, max_nodes);
  g.labels.resize(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    std::string label(static_cast<std::size_t>(d), '0');
    for (int j = 1; j <= d; ++j)
      if (v >> (d - j) & 1) label[j - 1] = '1';
    g.labels[v] = std::move(label);
  }
  for (int v = 0; v < g.n; ++v)
    for (int b = 0; b < d; ++b) {
      const int w = v ^ (1 << b);
      if (w > v) g.add_edge(v, w);
    }
  g.finalize();
  return g;
}

inline Graph make_clique(int n, int max_nodes = kDefaultMaxNodes) {
  if (n < 1) throw std::invalid_argument("make_clique: n must be >= 1");
  check_node_budget(n, max_nodes);
  Graph g(n, max_nodes);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  g.finalize();
  return g;
}

// Two cycles of length 2k+1 sharing a single vertex. Node 0 is the cut
// vertex; nodes 1..2k close the first cycle through it, nodes 2k+1..4k the
// second. 4k+1 nodes, 4k+2 edges, girth 2k+1.
inline Graph make_two_cycles(int k, int max_nodes = kDefaultMaxNodes) {
  if (k < 1) throw std::invalid_argument("make_two_cycles: k must be >= 1");
  check_node_budget(4LL * k + 1, max_nodes);
  Graph g(4 * k + 1, max_nodes);
  const auto add_cycle = [&](int first) {
    g.add_edge(0, first);
    for (int v = first; v + 1 < first + 2 * k; ++v) g.add_edge(v, v + 1);
    g.add_edge(first + 2 * k - 1, 0);
  };
  add_cycle(1);
  add_cycle(2 * k + 1);
  g.finalize();
  return g;
}

}  // namespace obcast
