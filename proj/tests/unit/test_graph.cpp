#include <gtest/gtest.h>

#include <set>

#include "incwb/colouring.hpp"
#include "incwb/graph.hpp"
#include "incwb/random.hpp"
#include "oracles.hpp"

using namespace incwb;
using namespace incwb::graph;

namespace {

Graph triangle() { return complete_graph(3); }

}  // namespace

TEST(IsProper, EdgeWithDistinctColours) {
  EXPECT_TRUE(is_proper(Graph::with_size(2, {{0, 1}}), {{0, 1}}));
}

TEST(IsProper, EdgeWithEqualColours) {
  EXPECT_FALSE(is_proper(Graph::with_size(2, {{0, 1}}), {{0, 0}}));
}

TEST(IsProper, TriangleThreeColours) { EXPECT_TRUE(is_proper(triangle(), {{0, 1, 2}})); }

TEST(IsProper, RejectsWrongLength) { EXPECT_THROW(is_proper(triangle(), {{0, 1}}), InputError); }

TEST(Chromatic, Triangle) {
  const auto r = chromatic_number(triangle());
  ASSERT_TRUE(r.exact);
  EXPECT_EQ(r.value(), 3U);
}

TEST(Chromatic, EdgelessFive) {
  const auto r = chromatic_number(Graph::with_size(5, {}));
  ASSERT_TRUE(r.exact);
  EXPECT_EQ(r.value(), 1U);
}

TEST(Chromatic, Petersen) {
  const auto g = petersen_graph();
  const auto r = chromatic_number(g);
  ASSERT_TRUE(r.exact);
  EXPECT_EQ(r.value(), oracle::chromatic(g));
  EXPECT_EQ(r.value(), 3U);
  EXPECT_TRUE(is_proper(g, r.best));
}

TEST(Chromatic, EmptyGraph) { EXPECT_EQ(chromatic_number(Graph{}).value(), 0U); }

TEST(Chromatic, TinyBudgetGivesInterval) {
  const auto g = petersen_graph();
  const auto r = chromatic_number(g, 1);
  if (!r.exact) {
    EXPECT_LE(r.lower, 3U);
    EXPECT_GE(r.upper, 3U);
  }
  EXPECT_TRUE(is_proper(g, r.best));
}

TEST(FindColouring, DecidesBothWays) {
  const auto c5 = cycle_graph(5);
  EXPECT_EQ(find_colouring(c5, 2).status, Truth::no);
  const auto yes = find_colouring(c5, 3);
  ASSERT_EQ(yes.status, Truth::yes);
  EXPECT_TRUE(is_proper(c5, *yes.colouring));
  EXPECT_LE(yes.colouring->colour_bound(), 3U);
}

TEST(ColouringNumber, Path3) { EXPECT_EQ(colouring_number(path_graph(3)), 2U); }
TEST(ColouringNumber, Cycle5) { EXPECT_EQ(colouring_number(cycle_graph(5)), 3U); }
TEST(ColouringNumber, K4) { EXPECT_EQ(colouring_number(complete_graph(4)), 4U); }

TEST(ColouringNumber, DegeneracyOrderAttainsIt) {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto g = random_graph(1 + rng.below(7), rng.below(80), rng);
    const auto ord = degeneracy_order(g);
    EXPECT_EQ(max_back_degree(g, ord) + 1, colouring_number(g));
    EXPECT_EQ(colouring_number(g), oracle::colouring_number(g));
  }
}

TEST(Greedy, PathAlternates) {
  const auto g = Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  const auto c = greedy_colour(g, NodeOrder::identity(3));
  EXPECT_EQ(c.colour, (std::vector<std::size_t>{0, 1, 0}));
}

TEST(Greedy, TriangleUsesThree) {
  const auto c = greedy_colour(triangle(), NodeOrder::identity(3));
  EXPECT_EQ(std::set<std::size_t>(c.colour.begin(), c.colour.end()), (std::set<std::size_t>{0, 1, 2}));
}

TEST(Greedy, Cycle5AroundUsesThree) {
  const auto g = cycle_graph(5);
  const auto c = greedy_colour(g, NodeOrder::identity(5));
  EXPECT_TRUE(is_proper(g, c));
  EXPECT_EQ(c.colours_used(), 3U);
}

TEST(Greedy, NeverExceedsColouringNumberOnDegeneracyOrder) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_graph(1 + rng.below(9), rng.below(80), rng);
    const auto c = greedy_colour(g, degeneracy_order(g));
    EXPECT_TRUE(is_proper(g, c));
    EXPECT_LE(c.colours_used(), colouring_number(g));
  }
}

TEST(Induced, TriangleOnTwoNodesIsEdge) {
  const auto h = induced_subgraph(triangle(), std::vector<NodeId>{0, 2});
  EXPECT_EQ(h.size(), 2U);
  EXPECT_EQ(h.edge_count(), 1U);
  EXPECT_EQ(h.names(), (std::vector<std::string>{"0", "2"}));
}

TEST(Induced, EmptySubsetGivesEmptyGraph) {
  EXPECT_TRUE(induced_subgraph(triangle(), std::vector<NodeId>{}).empty());
}

TEST(Induced, PetersenOuterIsC5) {
  const auto h = induced_subgraph(petersen_graph(), std::vector<NodeId>{0, 1, 2, 3, 4});
  EXPECT_EQ(h.edge_count(), 5U);
  for (NodeId v = 0; v < 5; ++v) EXPECT_EQ(h.degree(v), 2U);
  EXPECT_EQ(chromatic_number(h).value(), 3U);
}

TEST(Induced, RejectsUnknownNode) {
  EXPECT_THROW(induced_subgraph(triangle(), std::vector<NodeId>{5}), InputError);
  EXPECT_THROW(induced_subgraph(triangle(), std::vector<std::string>{"z"}), InputError);
}

TEST(GraphShape, RejectsSelfLoopsAndDuplicates) {
  EXPECT_THROW(Graph({"a"}, {{"a", "a"}}), InputError);
  EXPECT_THROW(Graph({"a", "a"}, {}), InputError);
  EXPECT_THROW(Graph({"a"}, {{"a", "b"}}), InputError);
  EXPECT_EQ(Graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}).edge_count(), 1U);
}

TEST(Invariants, ChromaticBoundedByColouringNumberAndOracle) {
  Rng rng(13);
  for (int i = 0; i < 150; ++i) {
    const auto g = random_graph(rng.below(8), rng.below(90), rng);
    const auto r = chromatic_number(g);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.value(), oracle::chromatic(g));
    EXPECT_LE(r.value(), colouring_number(g));
    EXPECT_GE(r.value(), greedy_clique_size(g));
  }
}

TEST(Invariants, Deterministic) {
  Rng a(5), b(5);
  const auto g1 = random_graph(9, 40, a);
  const auto g2 = random_graph(9, 40, b);
  ASSERT_EQ(g1, g2);
  EXPECT_EQ(chromatic_number(g1).best.colour, chromatic_number(g2).best.colour);
  EXPECT_EQ(degeneracy_order(g1).sequence(), degeneracy_order(g2).sequence());
}
