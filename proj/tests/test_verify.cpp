#include "obcast/verify.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace obcast {
namespace {

TEST(LeadingOnes, MatchesKnownValues) {
  EXPECT_EQ(leading_ones(12), 1);  // 11 = 1011
  EXPECT_EQ(leading_ones(2), 1);   // 1 = 1
  for (int d = 1; d <= 20; ++d) EXPECT_EQ(leading_ones(1 << d), d);
  EXPECT_EQ(leading_ones(13), 2);  // 12 = 1100
  EXPECT_THROW(leading_ones(1), std::invalid_argument);
}

TEST(LeadingOnes, AgreesWithAStringScanEverywhere) {
  for (int n = 2; n <= (1 << 20); ++n) {
    const unsigned x = static_cast<unsigned>(n - 1);
    std::string bits;
    for (int b = std::bit_width(x) - 1; b >= 0; --b) bits.push_back(x >> b & 1 ? '1' : '0');
    int scan = 0;
    while (scan < static_cast<int>(bits.size()) && bits[scan] == '1') ++scan;
    ASSERT_EQ(leading_ones(n), scan) << "n=" << n;
  }
}

TEST(EdgeBudgetTheorem2, Examples) {
  EXPECT_EQ(edge_budget_theorem2(5), 11);   // (3-1+1)*5 - 2*(3-1)
  EXPECT_EQ(edge_budget_theorem2(11), 29);  // (4-2+1)*11 - 2*(4-2)
  EXPECT_EQ(edge_budget_theorem2(3), 5);    // (2-0+1)*3 - 2*(2-0)
  EXPECT_EQ(edge_budget_theorem2(12), 32);
  EXPECT_THROW(edge_budget_theorem2(8), std::invalid_argument);
}

TEST(VerifyFamily, Theorem1SmallRangeAllPass) {
  const auto records = verify_family(Family::Theorem1, 5, 7, Model::FullyAdaptive);
  ASSERT_EQ(records.size(), 3u);
  for (const auto& rec : records) {
    EXPECT_FALSE(rec.skipped);
    EXPECT_TRUE(rec.pass);
    EXPECT_EQ(rec.worst_rounds, 3);
    EXPECT_EQ(rec.expected_rounds, 3);
  }
}

TEST(VerifyFamily, HypercubeRowsAreExact) {
  const auto records = verify_family(Family::Hypercube, 0, 6, Model::FullyAdaptive);
  ASSERT_EQ(records.size(), 7u);
  for (int d = 0; d <= 6; ++d) {
    const auto& rec = records[d];
    EXPECT_TRUE(rec.pass);
    EXPECT_EQ(rec.n, 1 << d);
    EXPECT_EQ(rec.worst_rounds, d);
    EXPECT_EQ(rec.edge_count, static_cast<long long>(d) * (1 << d) / 2);
    EXPECT_EQ(rec.edge_count, rec.edge_budget);
  }
}

TEST(VerifyFamily, Theorem2RangeSkipsPowersAndPasses) {
  const auto records = verify_family(Family::Theorem2, 3, 12, Model::FullyAdaptive);
  ASSERT_EQ(records.size(), 10u);
  int skipped = 0;
  for (const auto& rec : records) {
    if (rec.skipped) {
      ++skipped;
      EXPECT_TRUE(rec.n == 4 || rec.n == 8);
      continue;
    }
    EXPECT_TRUE(rec.pass) << "n=" << rec.n;
    EXPECT_EQ(rec.worst_rounds, rec.expected_rounds);
    EXPECT_LE(rec.edge_count, rec.edge_budget);
    EXPECT_GE(rec.sparsity_budget, 0);
    EXPECT_LE(rec.edge_count, rec.sparsity_budget);
  }
  EXPECT_EQ(skipped, 2);
}

TEST(VerifyFamily, CliqueRange) {
  const auto records = verify_family(Family::Clique, 2, 16, Model::FullyAdaptive);
  for (const auto& rec : records) {
    EXPECT_TRUE(rec.pass);
    EXPECT_EQ(rec.edge_count, static_cast<long long>(rec.n) * (rec.n - 1) / 2);
  }
}

TEST(VerifyFamily, ThreadedSweepMatchesSequential) {
  const auto seq = verify_family(Family::Theorem2, 3, 40, Model::FullyAdaptive, 1);
  const auto par = verify_family(Family::Theorem2, 3, 40, Model::FullyAdaptive, 4);
  ASSERT_EQ(seq.size(), par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    EXPECT_EQ(seq[i].n, par[i].n);
    EXPECT_EQ(seq[i].pass, par[i].pass);
    EXPECT_EQ(seq[i].skipped, par[i].skipped);
    EXPECT_EQ(seq[i].edge_count, par[i].edge_count);
    EXPECT_EQ(seq[i].worst_rounds, par[i].worst_rounds);
  }
}

TEST(VerifyFamily, SinkSeesRecordsInRangeOrder) {
  std::vector<int> seen;
  verify_family(Family::Theorem1, 3, 9, Model::FullyAdaptive, 2,
                [&](const VerificationRecord& rec) { seen.push_back(rec.n); });
  EXPECT_EQ(seen, (std::vector<int>{3, 4, 5, 6, 7, 8, 9}));
}

TEST(VerifyFamily, RejectsEmptyRange) {
  EXPECT_THROW(verify_family(Family::Clique, 5, 4, Model::FullyAdaptive), std::invalid_argument);
}

TEST(SeparationReport, K1IsStrict) {
  const auto records = separation_report(1, 1, /*include_adaptive=*/true);
  ASSERT_EQ(records.size(), 1u);
  const auto& rec = records[0];
  EXPECT_EQ(rec.n, 5);
  EXPECT_EQ(rec.b_classic, 3);
  EXPECT_EQ(rec.min_fully_adaptive, 4);
  EXPECT_TRUE(rec.exact);
  EXPECT_TRUE(rec.strict);
  EXPECT_EQ(rec.assignments, 384u);
  // any adaptive completion dominates the fully adaptive one
  EXPECT_GE(rec.min_adaptive, 4);
}

TEST(Theorem2Parameters, TrackTheLeadingOnesCount) {
  // m-k-1 stays within one of L(n) across the whole sweep range; flag any
  // excursion for inspection rather than asserting a fixed identity
  for (int n = 3; n <= 4096; ++n) {
    if (is_power_of_two(n)) continue;
    const auto dec = theorem2_decompose(n);
    const int l = leading_ones(n);
    EXPECT_GE(dec.m - dec.k - 1, l - 1) << "n=" << n;
    EXPECT_LE(dec.m - dec.k - 1, l + 1) << "n=" << n;
  }
}

}  // namespace
}  // namespace obcast
