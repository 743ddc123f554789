#include <gtest/gtest.h>

#include <filesystem>

#include "incwb/construct.hpp"
#include "incwb/famfun.hpp"
#include "incwb/io.hpp"
#include "incwb/random.hpp"

using namespace incwb;
using nlohmann::json;

TEST(Io, GraphRoundTrip) {
  const auto g = graph::petersen_graph();
  EXPECT_EQ(io::graph_from_json(io::to_json(g)), g);
}

TEST(Io, SystemRoundTrip) {
  Rng rng(71);
  const auto sys = random_system(4, 3, 40, rng);
  EXPECT_EQ(io::system_from_json(io::to_json(sys)), sys);
}

TEST(Io, FamilyRoundTrip) {
  const auto fam = famfun::gen_branches(3);
  const auto back = io::family_from_json(io::to_json(fam));
  EXPECT_EQ(back, fam);
  EXPECT_TRUE(back.normal());
}

TEST(Io, StructureRoundTrip) {
  const auto sys = relsys::RelationSystem::from_names({"x", "y"}, 1, {{{"x", "y"}}});
  construct::BuildParams p;
  p.depth = 2;
  const auto m = construct::saturate(sys, p).structure;
  EXPECT_EQ(io::structure_from_json(io::to_json(m, sys), sys), m);
}

TEST(Io, StructureRejectsForwardSuccessor) {
  const auto sys = relsys::RelationSystem::from_names({"x", "y"}, 1, {{{"x", "y"}}});
  const json j = {{"kappa", 1},
                  {"points", {{{"id", 0}, {"label", "y"}, {"level", 1}}, {{"id", 1}, {"label", "x"}, {"level", 0}}}},
                  {"succ", {{0, 0, 1}}}};
  EXPECT_THROW(io::structure_from_json(j, sys), InputError);
}

TEST(Io, WitnessAndColouringRoundTrip) {
  const auto sys = relsys::RelationSystem::from_names({"x", "y"}, 2, {{{"x", "y"}}});
  const relsys::FreenessWitness w{{{0, 1}, {1, 0}}, {1, 0}};
  EXPECT_EQ(io::witness_from_json(io::to_json(w, sys), sys), w);
  const auto g = graph::cycle_graph(4);
  const graph::Colouring c{{0, 1, 0, 1}};
  EXPECT_EQ(io::colouring_from_json(io::to_json(c, g), g).colour, c.colour);
}

TEST(Io, ChainKappaShorthand) {
  const json j = {{"graphs", {io::to_json(graph::path_graph(2))}}, {"kappa", 2}};
  const auto c = io::chain_from_json(j);
  EXPECT_EQ(c.chi0, 3U);
  EXPECT_EQ(c.chi1, 3U);
}

TEST(Io, ShapeErrorsAreInputErrors) {
  EXPECT_THROW(io::graph_from_json(json{{"nodes", 3}}), InputError);
  EXPECT_THROW(io::family_from_json(json{{"kappa", 1}, {"mu", 1}, {"members", {{2}}}}), InputError);
  EXPECT_THROW(io::system_from_json(json::array()), InputError);
  EXPECT_THROW(io::partition_from_json(json{{"parts", "x"}}), InputError);
}

TEST(Io, FileRoundTripAndMissingFile) {
  const auto path = std::filesystem::temp_directory_path() / "incwb_io_test.json";
  io::write_json_file(path, io::to_json(graph::complete_graph(3)));
  EXPECT_EQ(io::graph_from_json(io::read_json_file(path)), graph::complete_graph(3));
  std::filesystem::remove(path);
  EXPECT_THROW(io::read_json_file(path), InputError);
}
