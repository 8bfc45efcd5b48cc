#include "obcast/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "obcast/schemes.hpp"
#include "test_support.hpp"

namespace obcast {
namespace {

using testing::make_cycle;
using testing::make_path;
using testing::make_star;

TEST(ClassicBroadcastTime, OddCycles) {
  // a (2k+1)-cycle broadcasts in k+1 rounds from any source
  for (int k = 1; k <= 5; ++k) {
    const Graph g = make_cycle(2 * k + 1);
    for (int s = 0; s < g.n; ++s) EXPECT_EQ(classic_broadcast_time(g, s), k + 1) << "k=" << k;
  }
}

TEST(ClassicBroadcastTime, SmallCliquesAndCubes) {
  EXPECT_EQ(classic_broadcast_time(make_clique(4), 0), 2);
  EXPECT_EQ(classic_broadcast_time(make_clique(2), 1), 1);
  EXPECT_EQ(classic_broadcast_time_all(make_hypercube(3)).worst, 3);
  EXPECT_EQ(classic_broadcast_time(make_clique(1), 0), 0);
}

TEST(ClassicBroadcastTime, TwoCyclesFamily) {
  const auto r1 = classic_broadcast_time_all(make_two_cycles(1));
  EXPECT_EQ(r1.worst, 3);
  EXPECT_EQ(*std::min_element(r1.per_source.begin(), r1.per_source.end()), 3);
  const auto r2 = classic_broadcast_time_all(make_two_cycles(2));
  EXPECT_EQ(r2.worst, 5);
}

TEST(ClassicBroadcastTime, RespectsTheDoublingBound) {
  for (const Graph& g : {make_path(7), make_star(6), make_two_cycles(2), make_cycle(9)}) {
    const auto result = classic_broadcast_time_all(g);
    for (int s = 0; s < g.n; ++s) EXPECT_GE(result.per_source[s], ceil_log2(g.n));
  }
}

TEST(ClassicBroadcastTime, BudgetAndConnectivityErrors) {
  EXPECT_THROW(classic_broadcast_time(make_clique(15), 0), std::invalid_argument);
  Graph disconnected(4);
  disconnected.add_edge(0, 1);
  disconnected.add_edge(2, 3);
  disconnected.finalize();
  EXPECT_THROW(classic_broadcast_time(disconnected, 0), std::invalid_argument);
  EXPECT_THROW(classic_broadcast_time(make_path(3), 9), std::invalid_argument);
}

TEST(OptimalBroadcastSchedule, ReachesTheOracleValueAndSpans) {
  for (const Graph& g : {make_hypercube(3), make_two_cycles(1), make_path(5)}) {
    for (int s : {0, g.n - 1}) {
      const int want = classic_broadcast_time(g, s);
      const auto sched = optimal_broadcast_schedule(g, s);
      EXPECT_EQ(static_cast<int>(sched.rounds.size()), want);
      // every round: distinct callers, already informed, new callees
      std::vector<char> informed(static_cast<std::size_t>(g.n), 0);
      informed[s] = 1;
      for (const auto& round : sched.rounds) {
        std::vector<char> informed_next = informed;
        std::vector<char> used(static_cast<std::size_t>(g.n), 0);
        for (const auto& [caller, callee] : round) {
          EXPECT_TRUE(informed[caller]);
          EXPECT_FALSE(informed[callee]);
          EXPECT_FALSE(used[caller]);
          EXPECT_TRUE(g.has_edge(caller, callee));
          used[caller] = 1;
          informed_next[callee] = 1;
        }
        informed = informed_next;
      }
      EXPECT_EQ(std::count(informed.begin(), informed.end(), 1), g.n);
      // and the derived tree replays through the list machinery
      const auto tree = schedule_to_tree(g, sched);
      const auto lists = lists_from_broadcast_tree(g, tree);
      lists.validate(g);
      EXPECT_EQ(simulate(g, lists, s, Model::FullyAdaptive).completion, want);
    }
  }
}

TEST(OptimalListAssignment, SingleEdge) {
  const auto result = optimal_list_assignment(make_clique(2));
  EXPECT_EQ(result.value, 1);
  EXPECT_TRUE(result.exact);
}

TEST(OptimalListAssignment, PathOfThree) {
  const auto result = optimal_list_assignment(make_path(3));
  EXPECT_EQ(result.value, 2);
  EXPECT_TRUE(result.exact);
  // degree products: the two leaves are forced, the center has 2 orders
  EXPECT_LE(result.enumerated, 2u);
}

TEST(OptimalListAssignment, TwoCyclesSeparation) {
  const Graph g = make_two_cycles(1);
  SearchConfig cfg;
  const auto result = optimal_list_assignment(g, cfg);
  EXPECT_EQ(result.value, 4);  // strictly above the classic time 3
  EXPECT_TRUE(result.exact);
  EXPECT_EQ(result.enumerated, 384u);  // 2^4 * 4! full-permutation assignments
  // witness replay reproduces the reported value exactly
  EXPECT_EQ(max_broadcast_time(g, result.witness, Model::FullyAdaptive).worst, result.value);
}

TEST(OptimalListAssignment, OrderedSubsetsNeverBeatFullPermutationsHere) {
  for (const Graph& g : {make_path(3), make_clique(3), make_cycle(4)}) {
    SearchConfig perm;
    SearchConfig subset;
    subset.list_space = ListSpace::OrderedSubsets;
    const auto a = optimal_list_assignment(g, perm);
    const auto b = optimal_list_assignment(g, subset);
    EXPECT_TRUE(a.exact);
    EXPECT_TRUE(b.exact);
    EXPECT_LE(b.value, a.value);       // larger space
    EXPECT_GE(b.value, ceil_log2(g.n));
  }
}

TEST(OptimalListAssignment, ValueDominatesTheClassicOracle) {
  for (const Graph& g : {make_path(4), make_two_cycles(1), make_cycle(5), make_star(4)}) {
    const auto search = optimal_list_assignment(g);
    const auto classic = classic_broadcast_time_all(g);
    EXPECT_GE(search.value, classic.worst);
  }
}

TEST(OptimalListAssignment, BudgetAbortReportsPartialResult) {
  SearchConfig cfg;
  cfg.assignment_budget = 10;
  const auto result = optimal_list_assignment(make_two_cycles(1), cfg);
  EXPECT_FALSE(result.exact);
  EXPECT_EQ(result.enumerated, 10u);
  EXPECT_GE(result.value, 4);  // an upper bound from the assignments seen
  EXPECT_EQ(max_broadcast_time(make_two_cycles(1), result.witness, Model::FullyAdaptive).worst,
            result.value);
}

TEST(OptimalListAssignment, LowerBoundShortCircuit) {
  // the clique attains ceil(log2 n) early, so the search stops exact without
  // enumerating the whole space
  const auto result = optimal_list_assignment(make_clique(4));
  EXPECT_EQ(result.value, 2);
  EXPECT_TRUE(result.exact);
  EXPECT_LT(result.enumerated, 36u * 36u);
}

TEST(VerifyProposition1, HandInstances) {
  {
    const auto report = verify_proposition1(make_two_cycles(1));
    EXPECT_EQ(report.b_min, 3);
    EXPECT_EQ(report.bound, 6);
    EXPECT_LE(report.fa_worst, 6);
    EXPECT_TRUE(report.pass);
  }
  {
    const auto report = verify_proposition1(make_hypercube(3));
    EXPECT_EQ(report.b_min, 3);
    EXPECT_EQ(report.bound, 6);
    EXPECT_TRUE(report.pass);
  }
  {
    const auto report = verify_proposition1(make_clique(2));
    EXPECT_EQ(report.b_min, 1);
    EXPECT_EQ(report.fa_worst, 1);
    EXPECT_TRUE(report.pass);
  }
  {
    const auto report = verify_proposition1(make_star(3));
    EXPECT_EQ(report.b_min, 3);  // the hub must call each leaf in turn
    EXPECT_EQ(report.s_star, 0);
    EXPECT_LE(report.fa_worst, 6);
    EXPECT_TRUE(report.pass);
  }
}

}  // namespace
}  // namespace obcast
