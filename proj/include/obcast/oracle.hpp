#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "obcast/graph.hpp"
#include "obcast/lists.hpp"
#include "obcast/simulate.hpp"

namespace obcast {

namespace detail {

// Appends to `out` every informed set reachable from `state` in one round of
// the classic model: each informed node calls at most one uninformed
// neighbor, callers take pairwise distinct targets. Enumerated caller by
// caller; a caller stands down only when every target it could take is
// already taken, which yields exactly the order-maximal matchings (enough
// for shortest schedules, since a superset of informed nodes never hurts).
// (caller index, taken set) pairs are memoized to keep the expansion
// polynomial in the number of produced sets.
inline void classic_successors(const std::vector<std::uint32_t>& nbr, std::uint32_t state,
                               std::vector<int>& callers, std::unordered_set<std::uint64_t>& memo,
                               std::vector<std::uint32_t>& out) {
  callers.clear();
  memo.clear();
  const int n = static_cast<int>(nbr.size());
  for (int v = 0; v < n; ++v)
    if ((state >> v & 1u) && (nbr[v] & ~state)) callers.push_back(v);

  struct Walker {
    const std::vector<std::uint32_t>& nbr;
    const std::vector<int>& callers;
    std::unordered_set<std::uint64_t>& memo;
    std::vector<std::uint32_t>& out;
    std::uint32_t state;

    void go(std::size_t i, std::uint32_t taken) {
      if (!memo.insert((static_cast<std::uint64_t>(i) << 32) | taken).second) return;
      if (i == callers.size()) {
        out.push_back(state | taken);
        return;
      }
      std::uint32_t options = nbr[callers[i]] & ~state & ~taken;
      if (options == 0) {
        go(i + 1, taken);
        return;
      }
      while (options) {
        const std::uint32_t bit = options & (~options + 1);
        options ^= bit;
        go(i + 1, taken | bit);
      }
    }
  };
  Walker{nbr, callers, memo, out, state}.go(0, 0);
}

inline std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(g.n), 0);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v]) nbr[v] |= std::uint32_t{1} << u;
  return nbr;
}

}  // namespace detail

// Exact classic broadcast time b(G, s): the minimum number of rounds in
// which a source-aware protocol (each informed node calling at most one
// uninformed neighbor per round) can inform everyone. Shortest-path search
// over informed-set bitmasks; exact and intended for small n only.
inline int classic_broadcast_time(const Graph& g, int source, int node_budget = 14) {
  if (g.n > node_budget)
    throw std::invalid_argument("classic_broadcast_time: node budget exceeded");
  if (!g.has_node(source)) throw std::invalid_argument("classic_broadcast_time: bad source");
  if (!g.is_connected())
    throw std::invalid_argument("classic_broadcast_time: graph must be connected");
  if (g.n == 1) return 0;

  const auto nbr = detail::neighbor_masks(g);
  const std::uint32_t full = (std::uint32_t{1} << g.n) - 1;
  std::vector<std::int8_t> dist(std::size_t{1} << g.n, -1);
  std::deque<std::uint32_t> queue;
  const std::uint32_t start = std::uint32_t{1} << source;
  dist[start] = 0;
  queue.push_back(start);
  std::vector<int> callers;
  std::unordered_set<std::uint64_t> memo;
  std::vector<std::uint32_t> next_states;
  while (!queue.empty()) {
    const std::uint32_t state = queue.front();
    queue.pop_front();
    if (state == full) return dist[state];
    next_states.clear();
    detail::classic_successors(nbr, state, callers, memo, next_states);
    for (const std::uint32_t ns : next_states)
      if (dist[ns] < 0) {
        dist[ns] = static_cast<std::int8_t>(dist[state] + 1);
        queue.push_back(ns);
      }
  }
  throw std::logic_error("classic_broadcast_time: search exhausted before completion");
}

struct ClassicBroadcastResult {
  int worst = 0;
  std::vector<int> per_source;
};

// b(G) = max over sources of b(G, s), with the per-source values.
inline ClassicBroadcastResult classic_broadcast_time_all(const Graph& g, int node_budget = 14) {
  ClassicBroadcastResult out;
  out.per_source.resize(static_cast<std::size_t>(g.n));
  for (int s = 0; s < g.n; ++s) {
    out.per_source[s] = classic_broadcast_time(g, s, node_budget);
    out.worst = std::max(out.worst, out.per_source[s]);
  }
  return out;
}

// One optimal classic schedule: for each round the (caller, callee) pairs.
struct BroadcastSchedule {
  int source = 0;
  std::vector<std::vector<std::pair<int, int>>> rounds;
};

// Recovers an optimal schedule from the informed-set search: walk the
// predecessor chain of a shortest path and re-derive, per round, a matching
// of callers onto the newly informed nodes (smallest ids first).
inline BroadcastSchedule optimal_broadcast_schedule(const Graph& g, int source,
                                                    int node_budget = 14) {
  if (g.n > node_budget)
    throw std::invalid_argument("optimal_broadcast_schedule: node budget exceeded");
  if (!g.has_node(source)) throw std::invalid_argument("optimal_broadcast_schedule: bad source");
  if (!g.is_connected())
    throw std::invalid_argument("optimal_broadcast_schedule: graph must be connected");
  BroadcastSchedule sched;
  sched.source = source;
  if (g.n == 1) return sched;

  const auto nbr = detail::neighbor_masks(g);
  const std::uint32_t full = (std::uint32_t{1} << g.n) - 1;
  std::vector<std::int8_t> dist(std::size_t{1} << g.n, -1);
  std::vector<std::uint32_t> pred(std::size_t{1} << g.n, 0);
  std::deque<std::uint32_t> queue;
  const std::uint32_t start = std::uint32_t{1} << source;
  dist[start] = 0;
  queue.push_back(start);
  std::vector<int> callers;
  std::unordered_set<std::uint64_t> memo;
  std::vector<std::uint32_t> next_states;
  while (!queue.empty() && dist[full] < 0) {
    const std::uint32_t state = queue.front();
    queue.pop_front();
    next_states.clear();
    detail::classic_successors(nbr, state, callers, memo, next_states);
    for (const std::uint32_t ns : next_states)
      if (dist[ns] < 0) {
        dist[ns] = static_cast<std::int8_t>(dist[state] + 1);
        pred[ns] = state;
        queue.push_back(ns);
      }
  }
  if (dist[full] < 0)
    throw std::logic_error("optimal_broadcast_schedule: search exhausted before completion");

  std::vector<std::uint32_t> chain;
  for (std::uint32_t state = full; state != start; state = pred[state]) chain.push_back(state);
  chain.push_back(start);
  std::reverse(chain.begin(), chain.end());

  // Per round, match the new nodes to distinct informed callers (Kuhn's
  // augmenting paths, ascending ids for determinism). A saturating matching
  // exists by construction of the transition.
  std::vector<int> owner(static_cast<std::size_t>(g.n));  // caller -> target
  std::vector<char> visited(static_cast<std::size_t>(g.n));
  for (std::size_t step = 1; step < chain.size(); ++step) {
    const std::uint32_t before = chain[step - 1];
    const std::uint32_t added = chain[step] & ~before;
    std::fill(owner.begin(), owner.end(), -1);
    const auto augment = [&](auto&& self, int target) -> bool {
      for (int v : g.adj[target]) {
        if (!(before >> v & 1u) || visited[v]) continue;
        visited[v] = 1;
        if (owner[v] < 0 || self(self, owner[v])) {
          owner[v] = target;
          return true;
        }
      }
      return false;
    };
    for (int target = 0; target < g.n; ++target) {
      if (!(added >> target & 1u)) continue;
      std::fill(visited.begin(), visited.end(), 0);
      if (!augment(augment, target))
        throw std::logic_error("optimal_broadcast_schedule: unmatched callee");
    }
    std::vector<std::pair<int, int>> round;
    for (int v = 0; v < g.n; ++v)
      if (owner[v] >= 0) round.emplace_back(v, owner[v]);
    sched.rounds.push_back(std::move(round));
  }
  return sched;
}

// Ordered broadcast tree of a schedule: parents are the informing callers,
// children ordered by the round in which they were called.
inline OrderedBroadcastTree schedule_to_tree(const Graph& g, const BroadcastSchedule& sched) {
  OrderedBroadcastTree tree;
  tree.root = sched.source;
  tree.children.assign(static_cast<std::size_t>(g.n), {});
  for (const auto& round : sched.rounds)
    for (const auto& [caller, callee] : round) tree.children[caller].push_back(callee);
  return tree;
}

enum class ListSpace { FullPermutations, OrderedSubsets };

struct SearchConfig {
  Model model = Model::FullyAdaptive;
  ListSpace list_space = ListSpace::FullPermutations;
  int node_budget = 14;
  std::uint64_t assignment_budget = 50'000'000;
};

struct ListSearchResult {
  int value = kNever;
  ListAssignment witness;
  bool exact = false;
  std::uint64_t enumerated = 0;
};

namespace detail {

// Candidate lists of one node in a fixed deterministic order. Full
// permutations run through next_permutation from the sorted neighborhood;
// ordered subsets run lengths 0..deg, combinations in lexicographic order,
// and every permutation of each combination.
class ListEnumerator {
 public:
  ListEnumerator(std::vector<int> neighbors, ListSpace space)
      : sorted_(std::move(neighbors)), space_(space) {
    reset();
  }

  const std::vector<int>& current() const { return current_; }

  void reset() {
    if (space_ == ListSpace::FullPermutations) {
      current_ = sorted_;
    } else {
      length_ = 0;
      picks_.clear();
      current_.clear();
    }
  }

  // Advances to the next candidate; returns false after the last one and
  // leaves the enumerator back at the first.
  bool next() {
    if (space_ == ListSpace::FullPermutations)
      return std::next_permutation(current_.begin(), current_.end());
    if (length_ > 0 && std::next_permutation(current_.begin(), current_.end())) return true;
    if (length_ > 0 && next_combination()) {
      load_combination();
      return true;
    }
    if (length_ < static_cast<int>(sorted_.size())) {
      ++length_;
      picks_.resize(static_cast<std::size_t>(length_));
      for (int i = 0; i < length_; ++i) picks_[i] = i;
      load_combination();
      return true;
    }
    reset();
    return false;
  }

 private:
  bool next_combination() {
    const int n = static_cast<int>(sorted_.size());
    int i = length_ - 1;
    while (i >= 0 && picks_[i] == n - length_ + i) --i;
    if (i < 0) return false;
    ++picks_[i];
    for (int j = i + 1; j < length_; ++j) picks_[j] = picks_[j - 1] + 1;
    return true;
  }

  void load_combination() {
    current_.resize(static_cast<std::size_t>(length_));
    for (int i = 0; i < length_; ++i) current_[i] = sorted_[picks_[i]];
  }

  std::vector<int> sorted_;
  ListSpace space_;
  int length_ = 0;
  std::vector<int> picks_;
  std::vector<int> current_;
};

}  // namespace detail

// Exact minimum over the configured list space of the worst-source broadcast
// time, by exhaustive enumeration with two prunes: a candidate assignment is
// abandoned as soon as some source reaches the current best, and the search
// stops once the ceil(log2 n) lower bound is attained. If the assignment
// budget runs out the best value found so far is returned with exact=false.
inline ListSearchResult optimal_list_assignment(const Graph& g, const SearchConfig& cfg = {}) {
  if (g.n > cfg.node_budget)
    throw std::invalid_argument("optimal_list_assignment: node budget exceeded");
  if (cfg.assignment_budget == 0)
    throw std::invalid_argument("optimal_list_assignment: assignment budget must be positive");
  if (!g.is_connected())
    throw std::invalid_argument("optimal_list_assignment: graph must be connected");

  std::vector<detail::ListEnumerator> enums;
  enums.reserve(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) enums.emplace_back(g.adj[v], cfg.list_space);

  ListAssignment current;
  current.lists.resize(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) current.lists[v] = enums[v].current();

  const int lower_bound = ceil_log2(g.n);
  ListSearchResult result;
  SimWorkspace ws;
  bool enumeration_done = false;
  while (true) {
    if (result.enumerated == cfg.assignment_budget) break;
    ++result.enumerated;
    int value = 0;
    for (int s = 0; s < g.n && value < result.value; ++s)
      value = std::max(value, broadcast_completion(g, current, s, cfg.model, ws));
    if (value < result.value) {
      result.value = value;
      result.witness = current;
      if (value == lower_bound) {  // nothing can beat the doubling bound
        enumeration_done = true;
        break;
      }
    }
    int j = g.n - 1;
    while (j >= 0 && !enums[j].next()) {
      current.lists[j] = enums[j].current();
      --j;
    }
    if (j < 0) {
      enumeration_done = true;
      break;
    }
    current.lists[j] = enums[j].current();
  }
  result.exact = enumeration_done;
  return result;
}

struct Proposition1Report {
  int s_star = 0;    // a source of minimum classic broadcast time
  int b_min = 0;     // that minimum
  int fa_worst = 0;  // worst source under the tree-derived lists
  int bound = 0;     // 2 * b_min
  bool pass = false;
};

// Checks that lists derived from one optimal classic broadcast tree keep the
// worst source within twice the best classic time.
inline Proposition1Report verify_proposition1(const Graph& g, int node_budget = 14) {
  const auto classic = classic_broadcast_time_all(g, node_budget);
  Proposition1Report report;
  report.b_min = classic.per_source[0];
  for (int s = 1; s < g.n; ++s)
    if (classic.per_source[s] < report.b_min) {
      report.b_min = classic.per_source[s];
      report.s_star = s;
    }
  const auto schedule = optimal_broadcast_schedule(g, report.s_star, node_budget);
  const auto tree = schedule_to_tree(g, schedule);
  const auto lists = lists_from_broadcast_tree(g, tree);
  report.fa_worst = max_broadcast_time(g, lists, Model::FullyAdaptive).worst;
  report.bound = 2 * report.b_min;
  report.pass = report.fa_worst <= report.bound;
  return report;
}

}  // namespace obcast
