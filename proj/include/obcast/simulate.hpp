#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "obcast/graph.hpp"
#include "obcast/lists.hpp"

namespace obcast {

// How much a node learns about its neighbors' informed state:
//  - NonAdaptive: nothing; lists are followed blindly.
//  - Adaptive: only what it received; a node skips neighbors it got the
//    message from, and burns a round calling any other informed entry.
//  - FullyAdaptive: end-of-round acknowledgements reach everyone, so every
//    entry already informed is skipped at zero cost.
enum class Model { NonAdaptive, Adaptive, FullyAdaptive };

inline const char* model_name(Model m) {
  switch (m) {
    case Model::NonAdaptive: return "non-adaptive";
    case Model::Adaptive: return "adaptive";
    default: return "fully-adaptive";
  }
}

// Round count standing for "never happens". Truncated lists can leave nodes
// unreachable; that is a result, not an error.
inline constexpr int kNever = std::numeric_limits<int>::max();

// Full record of one broadcast run: per-node informed round (source at 0,
// kNever if unreached), the (caller, callee) log per round, and the
// completion round.
struct SimulationTrace {
  int source = 0;
  Model model = Model::FullyAdaptive;
  std::vector<int> informed_at;
  std::vector<std::vector<std::pair<int, int>>> calls;  // calls[t-1] = round t
  int completion = kNever;

  bool complete() const { return completion != kNever; }
  bool operator==(const SimulationTrace&) const = default;
};

// Scratch buffers so sweeps and searches can run many simulations without
// reallocating.
struct SimWorkspace {
  std::vector<int> informed_at;
  std::vector<int> cursor;
  std::vector<int> active;
  std::vector<int> fresh;
  std::vector<std::vector<int>> received_from;  // adaptive model only
  std::vector<std::pair<int, int>> pending;     // (recipient, sender)
};

namespace detail {

struct NoTrace {
  void record(int, int) {}
  void round_done() {}
};

struct CallLog {
  std::vector<std::vector<std::pair<int, int>>>* calls = nullptr;
  std::vector<std::pair<int, int>> round;
  void record(int u, int w) { round.emplace_back(u, w); }
  void round_done() {
    std::sort(round.begin(), round.end());
    calls->push_back(round);
    round.clear();
  }
};

// Shared engine for the three models. Round t (1-based) sees the informed
// set as of the end of round t-1; all calls within a round are simultaneous,
// so two nodes may call the same callee in one round and a node informed in
// round t first acts in round t+1. A node whose cursor reaches the end of
// its list (possibly entirely by skips) is permanently idle. Returns the
// completion round, or kNever if the lists cannot reach every node.
template <class Recorder>
int run_broadcast(const Graph& g, const ListAssignment& l, int source, Model model,
                  SimWorkspace& ws, Recorder& rec) {
  const int n = g.n;
  ws.informed_at.assign(static_cast<std::size_t>(n), kNever);
  ws.cursor.assign(static_cast<std::size_t>(n), 0);
  ws.active.clear();
  if (model == Model::Adaptive) {
    ws.received_from.resize(static_cast<std::size_t>(n));
    for (auto& r : ws.received_from) r.clear();
    ws.pending.clear();
  }

  ws.informed_at[source] = 0;
  int informed = 1;
  if (informed == n) return 0;
  if (!l.lists[source].empty()) ws.active.push_back(source);

  for (int t = 1;; ++t) {
    std::size_t keep = 0;
    bool any_call = false;
    ws.fresh.clear();
    for (std::size_t idx = 0; idx < ws.active.size(); ++idx) {
      const int v = ws.active[idx];
      const auto& list = l.lists[v];
      const int len = static_cast<int>(list.size());
      int c = ws.cursor[v];
      if (model == Model::FullyAdaptive) {
        while (c < len && ws.informed_at[list[c]] < t) ++c;
      } else if (model == Model::Adaptive) {
        const auto& known = ws.received_from[v];
        while (c < len && std::find(known.begin(), known.end(), list[c]) != known.end()) ++c;
      }
      if (c >= len) {  // exhausted: drop from the active set for good
        ws.cursor[v] = c;
        continue;
      }
      const int w = list[c];
      ws.cursor[v] = c + 1;
      ws.active[keep++] = v;
      any_call = true;
      rec.record(v, w);
      if (ws.informed_at[w] == kNever) {
        ws.informed_at[w] = t;
        ++informed;
        ws.fresh.push_back(w);
      }
      if (model == Model::Adaptive) ws.pending.emplace_back(w, v);
    }
    ws.active.resize(keep);
    if (!any_call) return kNever;
    rec.round_done();
    if (model == Model::Adaptive) {
      for (const auto& [recipient, sender] : ws.pending) {
        auto& known = ws.received_from[recipient];
        if (std::find(known.begin(), known.end(), sender) == known.end())
          known.push_back(sender);
      }
      ws.pending.clear();
    }
    for (int w : ws.fresh)
      if (!l.lists[w].empty()) ws.active.push_back(w);
    if (informed == n) return t;
  }
}

}  // namespace detail

// Single-source completion round without trace bookkeeping. The caller is
// expected to have validated the lists; this is the hot path for sweeps.
inline int broadcast_completion(const Graph& g, const ListAssignment& l, int source, Model model,
                                SimWorkspace& ws) {
  detail::NoTrace rec;
  return detail::run_broadcast(g, l, source, model, ws, rec);
}

// Deterministic round-by-round simulation of broadcast from one source.
inline SimulationTrace simulate(const Graph& g, const ListAssignment& l, int source, Model model) {
  l.validate(g);
  if (!g.has_node(source)) throw std::invalid_argument("simulate: source out of range");
  if (!g.is_connected()) throw std::invalid_argument("simulate: graph must be connected");
  SimulationTrace trace;
  trace.source = source;
  trace.model = model;
  SimWorkspace ws;
  detail::CallLog log;
  log.calls = &trace.calls;
  trace.completion = detail::run_broadcast(g, l, source, model, ws, log);
  trace.informed_at = std::move(ws.informed_at);
  return trace;
}

struct BroadcastSummary {
  int worst = 0;
  std::vector<int> per_source;

  bool all_complete() const { return worst != kNever; }
};

// Completion round from every source under a fixed assignment; worst is the
// max, with kNever propagating.
inline BroadcastSummary max_broadcast_time(const Graph& g, const ListAssignment& l, Model model) {
  l.validate(g);
  if (!g.is_connected())
    throw std::invalid_argument("max_broadcast_time: graph must be connected");
  BroadcastSummary out;
  out.per_source.resize(static_cast<std::size_t>(g.n));
  SimWorkspace ws;
  for (int s = 0; s < g.n; ++s) {
    out.per_source[s] = broadcast_completion(g, l, s, model, ws);
    out.worst = std::max(out.worst, out.per_source[s]);
  }
  return out;
}

}  // namespace obcast
