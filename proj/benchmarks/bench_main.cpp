#include <benchmark/benchmark.h>

#include <algorithm>

#include "incwb/colouring.hpp"
#include "incwb/construct.hpp"
#include "incwb/famfun.hpp"
#include "incwb/matching.hpp"
#include "incwb/random.hpp"
#include "incwb/reductions.hpp"
#include "incwb/relsys.hpp"

using namespace incwb;

static void BM_ChromaticRandom(benchmark::State& state) {
  Rng rng(1);
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 30, rng);
  for (auto _ : state) benchmark::DoNotOptimize(graph::chromatic_number(g).upper);
}
BENCHMARK(BM_ChromaticRandom)->Arg(20)->Arg(40)->Arg(60);

static void BM_ColouringNumber(benchmark::State& state) {
  Rng rng(2);
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 10, rng);
  for (auto _ : state) benchmark::DoNotOptimize(graph::colouring_number(g));
}
BENCHMARK(BM_ColouringNumber)->Arg(100)->Arg(1000);

static void BM_Matching(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t l = 0; l < n; ++l)
    for (int j = 0; j < 4; ++j) edges.emplace_back(l, rng.below(n));
  for (auto _ : state) {
    matching::BipartiteMatcher m(n, n);
    for (auto [l, r] : edges) m.add_edge(l, r);
    benchmark::DoNotOptimize(m.solve());
  }
}
BENCHMARK(BM_Matching)->Arg(1000)->Arg(10000);

static void BM_IsFree(benchmark::State& state) {
  Rng rng(4);
  const auto sys = random_system(static_cast<std::size_t>(state.range(0)), 2, 25, rng);
  for (auto _ : state) benchmark::DoNotOptimize(relsys::is_free(sys, sys.all()).truth);
}
BENCHMARK(BM_IsFree)->Arg(4)->Arg(6);

static void BM_SaturateHall(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto fam = famfun::gen_hall(n);
  const auto sys = reductions::family_to_system(fam, fam.all());
  construct::BuildParams p;
  p.depth = 2;
  for (auto _ : state) benchmark::DoNotOptimize(construct::saturate(sys, p).structure.size());
}
BENCHMARK(BM_SaturateHall)->Arg(2)->Arg(3);

static void BM_CegarHall(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto fam = famfun::gen_hall(n);
  const auto sys = reductions::family_to_system(fam, fam.all());
  construct::CegarParams cp;
  cp.max_depth = std::max<std::size_t>(3, n);
  for (auto _ : state) benchmark::DoNotOptimize(construct::cegar_chromatic(sys, cp).outcome);
}
BENCHMARK(BM_CegarHall)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
