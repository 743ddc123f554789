#include <gtest/gtest.h>

#include "incwb/random.hpp"
#include "incwb/relsys.hpp"
#include "oracles.hpp"

using namespace incwb;
using namespace incwb::relsys;

namespace {

RelationSystem xy(std::size_t kappa, std::vector<std::vector<std::pair<std::string, std::string>>> rel) {
  return RelationSystem::from_names({"x", "y"}, kappa, rel);
}

FreenessWitness witness(ColourMap h, std::vector<ElementId> order) { return {std::move(h), std::move(order)}; }

bool has_clause(const WitnessVerdict& v, Clause c) {
  for (const auto& x : v.violations)
    if (x.clause == c) return true;
  return false;
}

}  // namespace

TEST(ExpSet, SameColourGivesRelationIndex) {
  const auto sys = xy(2, {{{"x", "y"}}});
  EXPECT_EQ(exp_set(sys, {0, 1}, 1, witness({{0, 0}, {1, 0}}, {0, 1})).to_vector(), (std::vector<std::size_t>{0}));
}

TEST(ExpSet, DistinctColoursGiveEmpty) {
  const auto sys = xy(2, {{{"x", "y"}}});
  EXPECT_TRUE(exp_set(sys, {0, 1}, 1, witness({{0, 0}, {1, 1}}, {0, 1})).empty());
}

TEST(ExpSet, BothRelationsGiveFullSet) {
  const auto sys = xy(2, {{{"x", "y"}}, {{"x", "y"}}});
  EXPECT_EQ(exp_set(sys, {0, 1}, 1, witness({{0, 0}, {1, 0}}, {0, 1})).to_vector(),
            (std::vector<std::size_t>{0, 1}));
}

TEST(ExpSet, RejectsWitnessOffDomain) {
  const auto sys = xy(2, {{{"x", "y"}}});
  EXPECT_THROW(exp_set(sys, {0, 1}, 1, witness({{0, 0}}, {0})), InputError);
}

TEST(VerifyWitness, KappaTwoValid) {
  const auto sys = xy(2, {{{"x", "y"}}});
  EXPECT_TRUE(verify_witness(sys, {0, 1}, witness({{0, 0}, {1, 0}}, {0, 1})).valid());
}

TEST(VerifyWitness, KappaOneExceptionBoundFails) {
  const auto sys = xy(1, {{{"x", "y"}}});
  const auto v = verify_witness(sys, {0, 1}, witness({{0, 0}, {1, 0}}, {0, 1}));
  EXPECT_FALSE(v.valid());
  EXPECT_TRUE(has_clause(v, Clause::exceptions));
}

TEST(VerifyWitness, ReversedOrderFailsOrderClause) {
  const auto sys = xy(2, {{{"x", "y"}}});
  const auto v = verify_witness(sys, {0, 1}, witness({{0, 0}, {1, 0}}, {1, 0}));
  EXPECT_FALSE(v.valid());
  EXPECT_TRUE(has_clause(v, Clause::order));
}

TEST(VerifyWitness, ColourOutOfRange) {
  const auto sys = xy(2, {});
  const auto v = verify_witness(sys, {0, 1}, witness({{0, 0}, {1, 2}}, {0, 1}));
  EXPECT_TRUE(has_clause(v, Clause::colour_range));
  EXPECT_TRUE(verify_witness(sys, {0, 1}, witness({{0, 0}, {1, 2}}, {0, 1}), {3, true}).valid());
}

TEST(VerifyWitness, RelaxedDropsOrderClause) {
  const auto sys = xy(2, {{{"x", "y"}}});
  EXPECT_TRUE(verify_witness(sys, {0, 1}, witness({{0, 0}, {1, 0}}, {1, 0}), {0, false}).valid());
}

TEST(IsFree, EmptyRelationsFree) {
  const auto sys = xy(2, {});
  const auto r = is_free(sys, sys.all());
  ASSERT_EQ(r.truth, Truth::yes);
  EXPECT_TRUE(verify_witness(sys, sys.all(), *r.witness).valid());
}

TEST(IsFree, KappaOneEdgeNotFree) {
  const auto sys = xy(1, {{{"x", "y"}}});
  const auto r = is_free(sys, sys.all());
  EXPECT_EQ(r.truth, Truth::no);
  EXPECT_FALSE(r.witness);
}

TEST(IsFree, KappaTwoSingleRelationFree) {
  const auto sys = xy(2, {{{"x", "y"}}});
  const auto r = is_free(sys, sys.all());
  ASSERT_EQ(r.truth, Truth::yes);
  EXPECT_TRUE(verify_witness(sys, sys.all(), *r.witness).valid());
}

TEST(IsFree, CapGivesUndecided) {
  Rng rng(1);
  const auto sys = random_system(6, 2, 30, rng);
  SearchCaps caps;
  caps.max_elements = 3;
  EXPECT_EQ(is_free(sys, sys.all(), caps).truth, Truth::undecided);
}

TEST(StronglyFree, EmptyRelations) { EXPECT_EQ(is_strongly_free(xy(2, {}), {0, 1}).truth, Truth::yes); }

TEST(StronglyFree, KappaOneEdge) {
  const auto r = is_strongly_free(xy(1, {{{"x", "y"}}}), {0, 1});
  EXPECT_EQ(r.truth, Truth::no);
  EXPECT_TRUE(r.failing_order);
}

TEST(StronglyFree, OppositeRelationsAgreeWithOracle) {
  const auto sys = xy(2, {{{"x", "y"}}, {{"y", "x"}}});
  const bool expect = oracle::is_strongly_free(sys, sys.all(), 2);
  EXPECT_EQ(is_strongly_free(sys, sys.all()).truth, expect ? Truth::yes : Truth::no);
}

TEST(StronglyFree, CertificateCoversEveryOrder) {
  const auto sys = xy(2, {{{"x", "y"}}});
  const auto r = is_strongly_free(sys, sys.all());
  ASSERT_EQ(r.truth, Truth::yes);
  ASSERT_EQ(r.certificate.size(), 2U);
  for (const auto& w : r.certificate) EXPECT_TRUE(verify_witness(sys, sys.all(), w).valid());
}

TEST(WeaklyFree, EmptyRelationsConstantColour) {
  const auto r = is_weakly_free(xy(2, {}), {0, 1});
  ASSERT_EQ(r.truth, Truth::yes);
  for (const auto& [e, c] : *r.colouring) EXPECT_EQ(c, 0U);
}

TEST(WeaklyFree, KappaOneEdge) { EXPECT_EQ(is_weakly_free(xy(1, {{{"x", "y"}}}), {0, 1}).truth, Truth::no); }

TEST(LambdaFree, LambdaOneVacuous) { EXPECT_EQ(check_lambda_free(xy(1, {{{"x", "y"}}}), 1).truth, Truth::yes); }

TEST(LambdaFree, KappaOneEdge) {
  const auto sys = xy(1, {{{"x", "y"}}});
  EXPECT_EQ(check_lambda_free(sys, 2).truth, Truth::yes);
  const auto r = check_lambda_free(sys, 3);
  EXPECT_EQ(r.truth, Truth::no);
  EXPECT_EQ(*r.minimal_failure, (Subset{0, 1}));
}

TEST(LambdaFree, EmptyRelationsAnyLambda) {
  for (std::size_t l = 0; l < 5; ++l) EXPECT_EQ(check_lambda_free(xy(2, {}), l).truth, Truth::yes);
}

TEST(IncWitness, KappaOneEdgeChainFails) {
  const IncSystemWitness w{xy(1, {{{"x", "y"}}}), {{0}, {0, 1}}};
  EXPECT_EQ(verify_inc_witness(w).truth, Truth::no);
}

TEST(IncWitness, ShapeErrors) {
  const auto sys = xy(1, {});
  EXPECT_THROW(verify_inc_witness({sys, {}}), InputError);
  EXPECT_THROW(verify_inc_witness({sys, {{0}, {1}}}), InputError);
  EXPECT_THROW(verify_inc_witness({sys, {{0}}}), InputError);
}

TEST(Invariants, ExpWithinWeakExp) {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto sys = random_system(1 + rng.below(5), 1 + rng.below(3), rng.below(60), rng);
    const auto b = sys.all();
    FreenessWitness w;
    for (auto e : b) w.colour[e] = rng.below(2);
    w.order = b;
    rng.shuffle(w.order);
    for (auto e : b) {
      const auto ex = exp_set(sys, b, e, w);
      EXPECT_TRUE(ex.is_subset_of(weak_exp_set(sys, b, e, w.colour)));
      EXPECT_EQ(ex.to_vector(), oracle::exp_indices(sys, b, e, w));
    }
  }
}

TEST(Invariants, KappaOneFreeIffNoRelatedPair) {
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const auto sys = random_system(1 + rng.below(5), 1, rng.below(40), rng);
    Subset b;
    for (auto e : sys.all())
      if (rng.chance(2, 3)) b.push_back(e);
    bool related = false;
    for (const auto& [u, v] : sys.relation(0))
      if (std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v)) related = true;
    EXPECT_EQ(is_free(sys, b).truth, related ? Truth::no : Truth::yes);
  }
}

TEST(Invariants, HierarchyAndOracles) {
  Rng rng(23);
  for (int i = 0; i < 120; ++i) {
    const auto sys = random_system(1 + rng.below(4), 1 + rng.below(3), rng.below(51), rng);
    const auto b = sys.all();
    const auto k = sys.kappa();
    const auto f = is_free(sys, b);
    const auto s = is_strongly_free(sys, b);
    const auto w = is_weakly_free(sys, b);
    EXPECT_EQ(f.truth == Truth::yes, oracle::is_free(sys, b, k));
    EXPECT_EQ(s.truth == Truth::yes, oracle::is_strongly_free(sys, b, k));
    EXPECT_EQ(w.truth == Truth::yes, oracle::is_weakly_free(sys, b, k));
    if (s.truth == Truth::yes) {
      EXPECT_EQ(f.truth, Truth::yes);
    }
    if (f.truth == Truth::yes) {
      EXPECT_EQ(w.truth, Truth::yes);
    }
  }
}

TEST(Invariants, RelaxedAgreesWithOracle) {
  Rng rng(24);
  for (int i = 0; i < 80; ++i) {
    const auto sys = random_system(1 + rng.below(4), 1 + rng.below(3), rng.below(60), rng);
    const auto r = is_free(sys, sys.all(), {}, {0, false});
    EXPECT_EQ(r.truth == Truth::yes, oracle::is_free(sys, sys.all(), sys.kappa(), false));
  }
}

TEST(Invariants, FreenessMonotoneUnderSubsets) {
  Rng rng(25);
  for (int i = 0; i < 100; ++i) {
    const auto sys = random_system(1 + rng.below(5), 1 + rng.below(3), rng.below(60), rng);
    if (is_free(sys, sys.all()).truth != Truth::yes) continue;
    Subset sub;
    for (auto e : sys.all())
      if (rng.chance(1, 2)) sub.push_back(e);
    EXPECT_EQ(is_free(sys, sub).truth, Truth::yes);
  }
}

TEST(SystemShape, IrreflexiveAndNamed) {
  EXPECT_THROW(RelationSystem::from_names({"x"}, 1, {{{"x", "x"}}}), InputError);
  EXPECT_THROW(RelationSystem::from_names({"x"}, 1, {{{"x", "z"}}}), InputError);
  EXPECT_THROW(RelationSystem::from_names({"x", "x"}, 1, {}), InputError);
}
