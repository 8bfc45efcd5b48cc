// Shared helpers for the unit and acceptance suites: small named graphs,
// seeded random instances, and the trace invariant checks.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "obcast/graph.hpp"
#include "obcast/lists.hpp"
#include "obcast/simulate.hpp"

namespace obcast::testing {

inline Graph make_cycle(int len) {
  Graph g(len);
  for (int v = 0; v < len; ++v) g.add_edge(v, (v + 1) % len);
  g.finalize();
  return g;
}

inline Graph make_path(int len) {
  Graph g(len);
  for (int v = 0; v + 1 < len; ++v) g.add_edge(v, v + 1);
  g.finalize();
  return g;
}

inline Graph make_star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  g.finalize();
  return g;
}

inline Graph make_complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  g.finalize();
  return g;
}

// Hub 0 joined to every rim node of an outer cycle 1..len.
inline Graph make_wheel(int len) {
  Graph g(len + 1);
  for (int v = 1; v <= len; ++v) {
    g.add_edge(0, v);
    g.add_edge(v, v == len ? 1 : v + 1);
  }
  g.finalize();
  return g;
}

// Triangular prism: two triangles joined by a perfect matching.
inline Graph make_prism() {
  Graph g(6);
  for (int v = 0; v < 3; ++v) {
    g.add_edge(v, (v + 1) % 3);
    g.add_edge(3 + v, 3 + (v + 1) % 3);
    g.add_edge(v, 3 + v);
  }
  g.finalize();
  return g;
}

// Connected graph on n nodes: a random spanning tree plus a random sprinkle
// of extra edges.
inline Graph random_connected_graph(int n, std::mt19937& rng) {
  Graph g(n);
  std::set<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    const int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.emplace(parent, v);
  }
  const int max_extra = n * (n - 1) / 2 - (n - 1);
  const int extra = max_extra > 0 ? std::uniform_int_distribution<int>(0, max_extra / 2)(rng) : 0;
  for (int i = 0; i < extra; ++i) {
    int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (u == v) continue;
    edges.emplace(std::min(u, v), std::max(u, v));
  }
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  g.finalize();
  return g;
}

// Valid but otherwise arbitrary lists: each node keeps a random ordered
// subset of its neighborhood (full, truncated, or empty).
inline ListAssignment random_lists(const Graph& g, std::mt19937& rng) {
  ListAssignment lists;
  lists.lists.resize(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> order = g.adj[v];
    std::shuffle(order.begin(), order.end(), rng);
    const int keep = std::uniform_int_distribution<int>(0, static_cast<int>(order.size()))(rng);
    order.resize(static_cast<std::size_t>(keep));
    lists.lists[v] = std::move(order);
  }
  return lists;
}

// Checks every structural invariant of a trace against its inputs. Returns
// an empty string when clean, otherwise a description of the violation.
inline std::string check_trace(const Graph& g, const ListAssignment& l,
                               const SimulationTrace& trace) {
  const int n = g.n;
  if (static_cast<int>(trace.informed_at.size()) != n) return "informed_at size";
  if (trace.informed_at[trace.source] != 0) return "source not informed at round 0";

  std::vector<std::size_t> called(static_cast<std::size_t>(n), 0);  // per-caller cursor replay
  std::vector<int> first_call(static_cast<std::size_t>(n), kNever);
  for (std::size_t i = 0; i < trace.calls.size(); ++i) {
    const int t = static_cast<int>(i) + 1;
    std::set<int> callers_this_round;
    for (const auto& [caller, callee] : trace.calls[i]) {
      if (!g.has_edge(caller, callee)) return "call along a non-edge";
      if (trace.informed_at[caller] > t - 1) return "caller not informed before the round";
      if (!callers_this_round.insert(caller).second) return "caller acted twice in one round";
      const auto& list = l.lists[caller];
      // callee sequence of each caller must follow its list order
      auto pos = std::find(list.begin() + called[caller], list.end(), callee);
      if (pos == list.end()) return "callee sequence is not a subsequence of the list";
      called[caller] = static_cast<std::size_t>(pos - list.begin()) + 1;
      if (trace.model == Model::FullyAdaptive && trace.informed_at[callee] < t)
        return "fully-adaptive call to an already informed node";
      first_call[callee] = std::min(first_call[callee], t);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (v == trace.source) continue;
    if (trace.informed_at[v] != first_call[v]) return "informed_at disagrees with the call log";
  }
  int last = 0;
  bool all = true;
  for (int v = 0; v < n; ++v) {
    if (trace.informed_at[v] == kNever) all = false;
    else last = std::max(last, trace.informed_at[v]);
  }
  if (all && trace.completion != last) return "completion is not the last informed round";
  if (!all && trace.completion != kNever) return "completion finite with unreached nodes";
  if (all && static_cast<int>(trace.calls.size()) != trace.completion)
    return "call log does not stop at completion";
  if (trace.model == Model::NonAdaptive) {
    // blind callers walk an exact prefix of their list
    std::vector<std::size_t> count(static_cast<std::size_t>(n), 0);
    for (const auto& round : trace.calls)
      for (const auto& [caller, callee] : round) {
        if (l.lists[caller][count[caller]] != callee) return "non-adaptive call out of order";
        ++count[caller];
      }
  }
  return {};
}

}  // namespace obcast::testing
