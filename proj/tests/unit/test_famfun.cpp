#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "incwb/famfun.hpp"
#include "incwb/rng.hpp"
#include "oracles.hpp"

using namespace incwb;
using namespace incwb::famfun;

namespace {

std::vector<std::vector<std::size_t>> ranges_of(const FunctionFamily& fam, const std::vector<MemberId>& sub) {
  std::vector<std::vector<std::size_t>> out;
  for (auto f : sub) out.push_back(fam.range(f));
  return out;
}

bool blocking_violates_hall(const FunctionFamily& fam, const std::vector<MemberId>& blocking) {
  std::set<Value> uni;
  for (auto f : blocking) uni.insert(fam.range(f).begin(), fam.range(f).end());
  return !blocking.empty() && uni.size() < blocking.size();
}

}  // namespace

TEST(Transversal, TwoMembersSharingZero) {
  const FunctionFamily fam(2, 3, {{0, 1}, {0, 2}});
  const auto r = find_transversal(fam, fam.all());
  ASSERT_TRUE(r.transversal);
  EXPECT_TRUE(oracle::has_transversal(ranges_of(fam, fam.all())));
  EXPECT_TRUE(is_valid_transversal(fam, fam.all(), *r.transversal));
}

TEST(Transversal, EqualSingletonRangesBlock) {
  const FunctionFamily fam(2, 1, {{0, 0}, {0, 0}});
  const auto r = find_transversal(fam, fam.all());
  EXPECT_FALSE(r.transversal);
  EXPECT_EQ(r.blocking, (std::vector<MemberId>{0, 1}));
}

TEST(Transversal, EmptySubfamily) {
  const FunctionFamily fam(2, 1, {{0, 0}, {0, 0}});
  const auto r = find_transversal(fam, {});
  ASSERT_TRUE(r.transversal);
  EXPECT_TRUE(r.transversal->choice.empty());
}

TEST(Transversal, ValidatorRejectsBadChoices) {
  const FunctionFamily fam(2, 3, {{0, 1}, {0, 2}});
  EXPECT_FALSE(is_valid_transversal(fam, fam.all(), {{{0, 0}, {1, 0}}}));
  EXPECT_FALSE(is_valid_transversal(fam, fam.all(), {{{0, 2}, {1, 0}}}));
  EXPECT_FALSE(is_valid_transversal(fam, fam.all(), {{{0, 1}}}));
  EXPECT_TRUE(is_valid_transversal(fam, fam.all(), {{{0, 1}, {1, 2}}}));
}

TEST(FreeFamily, TransversalFamilyUsesOnePiece) {
  const FunctionFamily fam(2, 3, {{0, 1}, {0, 2}});
  const auto r = is_free_family(fam, fam.all(), 2);
  ASSERT_EQ(r.truth, Truth::yes);
  ASSERT_TRUE(is_valid_decomposition(fam, fam.all(), *r.decomposition));
  std::size_t nonempty = 0;
  for (const auto& p : r.decomposition->pieces) nonempty += !p.empty();
  EXPECT_EQ(nonempty, 1U);
}

TEST(FreeFamily, ThreeEqualSingletonsNotTwoFree) {
  const FunctionFamily fam(2, 1, {{0, 0}, {0, 0}, {0, 0}});
  EXPECT_EQ(is_free_family(fam, fam.all(), 2).truth, Truth::no);
}

TEST(FreeFamily, TwoPairsOfSingletons) {
  const FunctionFamily fam(2, 2, {{0, 0}, {0, 0}, {1, 1}, {1, 1}});
  const auto r = is_free_family(fam, fam.all(), 2);
  ASSERT_EQ(r.truth, Truth::yes);
  ASSERT_TRUE(is_valid_decomposition(fam, fam.all(), *r.decomposition));
  for (const auto& p : r.decomposition->pieces) {
    ASSERT_EQ(p.size(), 2U);
    EXPECT_NE(fam.range(p[0]), fam.range(p[1]));
  }
}

TEST(FreeFamily, CapGivesUndecided) {
  const auto fam = gen_hall(4);
  EXPECT_EQ(is_free_family(fam, fam.all(), 1, 3).truth, Truth::undecided);
}

TEST(LambdaFree, Hall3) {
  const auto fam = gen_hall(3);
  EXPECT_EQ(check_family_lambda_free(fam, 4).truth, Truth::yes);
  const auto r = check_family_lambda_free(fam, 5);
  EXPECT_EQ(r.truth, Truth::no);
  EXPECT_EQ(r.minimal_failure->size(), 4U);
}

TEST(LambdaFree, LambdaOneAlwaysTrue) {
  EXPECT_EQ(check_family_lambda_free(FunctionFamily(1, 1, {{0}, {0}, {0}}), 1).truth, Truth::yes);
}

TEST(LambdaFree, DisjointRanges) {
  const FunctionFamily fam(2, 8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  for (std::size_t l = 0; l <= 6; ++l) EXPECT_EQ(check_family_lambda_free(fam, l).truth, Truth::yes);
}

TEST(Hall, OneHasTwoSingletonMembers) {
  const auto fam = gen_hall(1);
  ASSERT_EQ(fam.size(), 2U);
  EXPECT_FALSE(find_transversal(fam, fam.all()).transversal);
  EXPECT_TRUE(find_transversal(fam, {0}).transversal);
  EXPECT_TRUE(find_transversal(fam, {1}).transversal);
}

TEST(Hall, TwoAndThreeAgainstOracle) {
  for (std::size_t n : {2U, 3U}) {
    const auto fam = gen_hall(n);
    EXPECT_EQ(fam.size(), n + 1);
    EXPECT_FALSE(oracle::has_transversal(ranges_of(fam, fam.all())));
    EXPECT_FALSE(find_transversal(fam, fam.all()).transversal);
    for_each_k_subset(fam.size(), n, [&](const std::vector<std::size_t>& s) {
      EXPECT_TRUE(oracle::has_transversal(ranges_of(fam, s)));
      EXPECT_TRUE(find_transversal(fam, s).transversal);
      return true;
    });
  }
}

TEST(Hall, LambdaFreeUpToFive) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto fam = gen_hall(n);
    EXPECT_EQ(check_family_lambda_free(fam, n + 1).truth, Truth::yes) << n;
    EXPECT_FALSE(find_transversal(fam, fam.all()).transversal) << n;
  }
}

TEST(Hall, ZeroRejected) { EXPECT_THROW(gen_hall(0), InputError); }

TEST(Branches, OneGivesDisjointRanges) {
  const auto fam = gen_branches(1);
  ASSERT_EQ(fam.size(), 2U);
  EXPECT_TRUE(fam.normal());
  EXPECT_NE(fam.member(0)[0], fam.member(1)[0]);
}

TEST(Branches, TwoSharesFirstCoordinateInPairs) {
  const auto fam = gen_branches(2);
  ASSERT_EQ(fam.size(), 4U);
  EXPECT_EQ(fam.mu(), 8U);
  EXPECT_EQ(fam.member(0)[0], fam.member(1)[0]);
  EXPECT_EQ(fam.member(2)[0], fam.member(3)[0]);
  EXPECT_NE(fam.member(0)[0], fam.member(2)[0]);
  std::set<Value> second;
  for (auto f : fam.all()) second.insert(fam.member(f)[1]);
  EXPECT_EQ(second.size(), 4U);
}

TEST(Branches, TransversalsMatchOracle) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto fam = gen_branches(k);
    EXPECT_EQ(find_transversal(fam, fam.all()).transversal.has_value(),
              oracle::has_transversal(ranges_of(fam, fam.all())));
  }
}

TEST(Random, Deterministic) { EXPECT_EQ(gen_random(3, 5, 20, 99), gen_random(3, 5, 20, 99)); }

TEST(Random, EmptyCount) { EXPECT_EQ(gen_random(3, 5, 0, 1).size(), 0U); }

TEST(Random, ValuesUniformChiSquare) {
  // 10^4 draws over 10 values; 27.88 is the 0.999 quantile of chi-square with 9 degrees of freedom.
  const auto fam = gen_random(10, 10, 1000, 2024);
  std::vector<double> counts(10, 0);
  for (const auto& t : fam.members())
    for (auto v : t) counts[v] += 1;
  double stat = 0;
  for (double c : counts) stat += (c - 1000.0) * (c - 1000.0) / 1000.0;
  EXPECT_LT(stat, 27.88);
}

TEST(Family, ShapeErrors) {
  EXPECT_THROW(FunctionFamily(2, 3, {{0}}), InputError);
  EXPECT_THROW(FunctionFamily(1, 3, {{3}}), InputError);
  EXPECT_THROW(FunctionFamily(1, 3, {{1}, {1}}, true), InputError);
}

TEST(Invariants, TransversalMatchesOracleExhaustively) {
  // Every family of up to 3 members over kappa = 2, mu = 3.
  std::vector<Tuple> tuples;
  for (Value a = 0; a < 3; ++a)
    for (Value b = 0; b < 3; ++b) tuples.push_back({a, b});
  for (std::size_t m = 0; m <= 3; ++m) {
    std::vector<std::size_t> pick(m, 0);
    while (true) {
      std::vector<Tuple> members;
      for (auto p : pick) members.push_back(tuples[p]);
      const FunctionFamily fam(2, 3, members);
      const auto r = find_transversal(fam, fam.all());
      ASSERT_EQ(r.transversal.has_value(), oracle::has_transversal(ranges_of(fam, fam.all())));
      if (r.transversal) {
        EXPECT_TRUE(is_valid_transversal(fam, fam.all(), *r.transversal));
      } else {
        EXPECT_TRUE(blocking_violates_hall(fam, r.blocking));
      }
      std::size_t i = m;
      while (i > 0 && ++pick[i - 1] == tuples.size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
}

TEST(Invariants, OnePieceFreenessIsTransversal) {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto fam = gen_random(1 + rng.below(3), 1 + rng.below(5), rng.below(7), rng.next());
    EXPECT_EQ(is_free_family(fam, fam.all(), 1).truth == Truth::yes,
              find_transversal(fam, fam.all()).transversal.has_value());
  }
}

TEST(Invariants, FreenessMonotoneUnderSubfamilies) {
  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    const auto fam = gen_random(2, 1 + rng.below(4), rng.below(8), rng.next());
    if (is_free_family(fam, fam.all(), 2).truth != Truth::yes) continue;
    std::vector<MemberId> sub;
    for (auto f : fam.all())
      if (rng.chance(1, 2)) sub.push_back(f);
    const auto r = is_free_family(fam, sub, 2);
    ASSERT_EQ(r.truth, Truth::yes);
    EXPECT_TRUE(is_valid_decomposition(fam, sub, *r.decomposition));
  }
}

TEST(Chain, PrefixesOfHall) {
  const auto fam = gen_hall(2);
  EXPECT_EQ(check_free_chain(fam, {{0}, {0, 1}}, 1).truth, Truth::yes);
  const auto r = check_free_chain(fam, {{0}, {0, 1}, {0, 1, 2}}, 1);
  EXPECT_EQ(r.truth, Truth::no);
  EXPECT_EQ(r.failing_index, 2U);
}
