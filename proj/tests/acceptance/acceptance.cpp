// Acceptance battery: one PASS/FAIL line per criterion. Instance counts,
// seeds and runtime limits are fixed here; every expected value comes from
// the brute-force oracles in tests/support.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "incwb/cli/cli.hpp"
#include "incwb/colouring.hpp"
#include "incwb/construct.hpp"
#include "incwb/famfun.hpp"
#include "incwb/random.hpp"
#include "incwb/reductions.hpp"
#include "incwb/relsys.hpp"
#include "oracles.hpp"

using namespace incwb;

namespace {

struct Outcome {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first_failure = "instance " + std::to_string(instances) + ": " + what;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::vector<graph::Graph> graph_corpus() {
  std::vector<graph::Graph> out;
  for (std::size_t n = 0; n <= 5; ++n) {
    auto all = oracle::all_graphs(n);
    out.insert(out.end(), all.begin(), all.end());
  }
  Rng rng(1001);
  for (int i = 0; i < 1000; ++i) out.push_back(random_graph(6 + rng.below(2), rng.below(101), rng));
  return out;
}

// Properness from the edge list alone.
bool proper(const graph::Graph& g, const graph::Colouring& c) {
  if (c.size() != g.size()) return false;
  for (const auto& e : g.edges())
    if (c.colour[e.u] == c.colour[e.v]) return false;
  return true;
}

std::vector<std::vector<std::size_t>> ranges_of(const famfun::FunctionFamily& fam) {
  std::vector<std::vector<std::size_t>> out;
  for (auto f : fam.all()) out.push_back(fam.range(f));
  return out;
}

construct::KaStructure build(const relsys::RelationSystem& sys, std::size_t depth) {
  construct::BuildParams p;
  p.depth = depth;
  p.witness_cap = 8;
  p.max_points = 400;
  return construct::saturate(sys, p).structure;
}

Outcome chromatic_oracle() {
  Outcome o;
  for (const auto& g : graph_corpus()) {
    const auto r = graph::chromatic_number(g);
    o.check(r.exact && r.value() == oracle::chromatic(g) && proper(g, r.best), "chromatic number differs");
    ++o.instances;
  }
  return o;
}

Outcome colouring_number_oracle() {
  Outcome o;
  for (const auto& g : graph_corpus()) {
    o.check(graph::colouring_number(g) == oracle::colouring_number(g), "colouring number differs");
    ++o.instances;
  }
  return o;
}

Outcome transversal_oracle() {
  Outcome o;
  auto one = [&](const famfun::FunctionFamily& fam) {
    const auto r = famfun::find_transversal(fam, fam.all());
    const bool expect = oracle::has_transversal(ranges_of(fam));
    o.check(r.transversal.has_value() == expect, "existence differs");
    if (r.transversal) o.check(famfun::is_valid_transversal(fam, fam.all(), *r.transversal), "invalid transversal");
    ++o.instances;
  };
  // Every sequence of at most 4 nonempty ranges over mu <= 4; a range is
  // realized as a length-4 tuple listing its values with the last repeated.
  for (std::size_t mu = 1; mu <= 4; ++mu) {
    std::vector<famfun::Tuple> tuples;
    for (std::uint32_t mask = 1; mask < (1U << mu); ++mask) {
      famfun::Tuple t;
      for (std::size_t v = 0; v < mu; ++v)
        if (mask >> v & 1) t.push_back(v);
      while (t.size() < 4) t.push_back(t.back());
      tuples.push_back(t);
    }
    for (std::size_t m = 0; m <= 4; ++m) {
      std::vector<std::size_t> pick(m, 0);
      while (true) {
        std::vector<famfun::Tuple> members;
        for (auto p : pick) members.push_back(tuples[p]);
        one(famfun::FunctionFamily(4, mu, members));
        std::size_t i = m;
        while (i > 0 && ++pick[i - 1] == tuples.size()) pick[--i] = 0;
        if (i == 0) break;
      }
    }
  }
  Rng rng(1003);
  for (int i = 0; i < 500; ++i) one(famfun::gen_random(1 + rng.below(3), 1 + rng.below(7), rng.below(8), rng.next()));
  return o;
}

Outcome freeness_hierarchy() {
  Outcome o;
  Rng rng(1004);
  for (int i = 0; i < 300; ++i, ++o.instances) {
    const auto sys = random_system(1 + rng.below(4), 1 + rng.below(3), rng.below(51), rng);
    const auto b = sys.all();
    const auto k = sys.kappa();
    const auto s = relsys::is_strongly_free(sys, b);
    const auto f = relsys::is_free(sys, b);
    const auto w = relsys::is_weakly_free(sys, b);
    o.check(s.truth != Truth::undecided && f.truth != Truth::undecided && w.truth != Truth::undecided, "undecided");
    o.check((s.truth == Truth::yes) == oracle::is_strongly_free(sys, b, k), "strong freeness differs from oracle");
    o.check((f.truth == Truth::yes) == oracle::is_free(sys, b, k), "freeness differs from oracle");
    o.check((w.truth == Truth::yes) == oracle::is_weakly_free(sys, b, k), "weak freeness differs from oracle");
    o.check(s.truth != Truth::yes || f.truth == Truth::yes, "strongly free but not free");
    o.check(f.truth != Truth::yes || w.truth == Truth::yes, "free but not weakly free");
    if (f.witness) {
      o.check(relsys::verify_witness(sys, b, *f.witness).valid(), "witness rejected by verify_witness");
      std::vector<std::size_t> hs;
      for (auto e : f.witness->order) hs.push_back(f.witness->colour.at(e));
      o.check(oracle::witness_ok(sys, f.witness->order, hs, true), "witness rejected by oracle");
    }
  }
  return o;
}

Outcome witness_colouring() {
  Outcome o;
  Rng rng(1005);
  while (o.instances < 200) {
    const auto sys = random_system(2 + rng.below(3), 1 + rng.below(3), 10 + rng.below(40), rng);
    relsys::Subset b;
    for (auto e : sys.all())
      if (rng.chance(3, 4)) b.push_back(e);
    const auto f = relsys::is_free(sys, b);
    if (!f.witness) continue;
    const auto m = build(sys, 1 + rng.below(2));
    const auto wc = construct::colour_from_witness(m, sys, b, *f.witness);
    const auto k = sys.kappa();
    o.check(proper(wc.part.graph, wc.colouring), "improper");
    o.check(wc.colouring.colour_bound() <= k * k, "more than kappa^2 colours");
    for (auto cl : construct::class_colouring_numbers(m, sys, b, *f.witness))
      o.check(cl <= k, "class colouring number above kappa");
    ++o.instances;
  }
  return o;
}

Outcome extraction_dichotomy() {
  Outcome o;
  Rng rng(1006);
  while (o.instances < 200) {
    const auto sys = random_system(2 + rng.below(3), 1 + rng.below(3), 10 + rng.below(50), rng);
    const auto m = build(sys, 1 + rng.below(2));
    const auto g = construct::graph_of(m);
    const auto c = graph::find_colouring(g, sys.kappa());
    if (c.status != Truth::yes) continue;
    std::vector<relsys::ElementId> ord = sys.all();
    rng.shuffle(ord);
    const auto ex = construct::extract_from_colouring(m, sys, *c.colouring, ord);
    if (ex.is_case_one()) {
      o.check(!ex.case_one().empty(), "case 1 without an element");
    } else {
      const auto& two = ex.case_two();
      relsys::Subset dom;
      for (const auto& [e, h] : two.h) dom.push_back(e);
      relsys::FreenessWitness w{two.h, {}};
      for (auto e : ord)
        if (two.h.count(e)) w.order.push_back(e);
      for (auto e : dom) {
        const auto lib = relsys::exp_set(sys, dom, e, w);
        const auto ref = oracle::exp_indices(sys, dom, e, w);
        o.check(lib.to_vector() == ref, "exp_set differs from oracle");
        o.check(ref.size() < sys.kappa(), "case 2 exception set reaches kappa");
        o.check(lib.is_subset_of(two.z.at(e)), "exp not within Z");
      }
    }
    ++o.instances;
  }
  return o;
}

Outcome family_round_trips() {
  Outcome o;
  Rng rng(1007);
  while (o.instances < 200) {
    const auto fam = famfun::gen_random(1 + rng.below(3), 2 + rng.below(4), 1 + rng.below(6), rng.next());
    const auto d = famfun::is_free_family(fam, fam.all(), fam.kappa());
    if (!d.decomposition) continue;
    auto base = fam.all();
    rng.shuffle(base);
    const reductions::PairingScheme scheme(fam.kappa());
    const auto sys = reductions::family_to_system(fam, base);
    const auto w = reductions::decomposition_to_witness(fam, *d.decomposition, base, scheme);
    const bool verified = relsys::verify_witness(sys, fam.all(), w, {scheme.colours(), true}).valid();
    o.check(verified, "decomposition witness rejected");
    if (verified) {
      const auto part = reductions::witness_to_partition(fam, w, base, scheme.colours());
      for (const auto& [key, members] : part.pieces) {
        o.check(famfun::is_valid_transversal(fam, members, part.choices.at(key)), "canonical choice invalid");
        std::vector<std::vector<std::size_t>> rs;
        for (auto f : members) rs.push_back(fam.range(f));
        o.check(famfun::find_transversal(fam, members).transversal.has_value() && oracle::has_transversal(rs),
                "piece has no transversal");
      }
    }
    ++o.instances;
  }
  return o;
}

Outcome graph_exp_dichotomy() {
  Outcome o;
  Rng rng(1008);
  for (int i = 0; i < 200; ++i, ++o.instances) {
    const auto g = random_graph(1 + rng.below(10), rng.below(101), rng);
    std::vector<graph::NodeId> seq(g.size());
    for (std::size_t v = 0; v < seq.size(); ++v) seq[v] = v;
    rng.shuffle(seq);
    const auto sys = reductions::graph_to_system(g, graph::NodeOrder(seq, g.size()), 1 + rng.below(4));
    for (const auto& s : reductions::random_exp_samples(sys, 5, rng.next()))
      for (auto e : s.b) {
        const auto n = oracle::exp_indices(sys, s.b, e, s.w).size();
        o.check(n == 0 || n == sys.kappa(), "exp set neither empty nor full");
      }
  }
  return o;
}

Outcome end_to_end() {
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n, ++o.instances) {
    const auto fam = famfun::gen_hall(n);
    for (std::size_t k = 0; k <= n; ++k)
      for_each_k_subset(fam.size(), k, [&](const std::vector<std::size_t>& s) {
        std::vector<std::vector<std::size_t>> rs;
        for (auto f : s) rs.push_back(fam.range(f));
        o.check(oracle::has_transversal(rs) && famfun::find_transversal(fam, s).transversal.has_value(),
                "small subfamily without transversal");
        return true;
      });
    o.check(!oracle::has_transversal(ranges_of(fam)) && !famfun::find_transversal(fam, fam.all()).transversal,
            "whole family has a transversal");

    const auto rep = cli::demo_incompactness(n, {});
    const auto j = rep.to_json();
    for (const char* stage : {"small-subfamilies", "whole-family", "cegar", "chromatic"}) {
      bool passed = false;
      for (const auto& st : j["stages"])
        if (st["name"] == stage) passed = st["verdict"] == "pass";
      o.check(passed, std::string("demo stage ") + stage + " did not pass for n = " + std::to_string(n));
    }

    construct::CegarParams cp;
    cp.max_depth = 3;
    const auto cr = construct::cegar_chromatic(reductions::family_to_system(fam, fam.all()), cp);
    o.check(cr.outcome == construct::CegarOutcome::exceeds_kappa && cr.depth_reached <= 3,
            "cegar did not certify within depth 3 for n = " + std::to_string(n));
    const auto g = construct::graph_of(cr.structure);
    o.check(graph::find_colouring(g, n).status == Truth::no, "certified graph is n-colourable");
    if (n == 1) {
      o.check(g.edge_count() > 0, "n = 1 graph has no edge");
      o.check(oracle::chromatic(g) == 2, "n = 1 graph is not 2-chromatic");
    }
  }
  return o;
}

Outcome monotonicity() {
  Outcome o;
  Rng rng(1010);
  for (int i = 0; i < 200; ++i, ++o.instances) {
    const auto g = random_graph(1 + rng.below(9), rng.below(101), rng);
    std::vector<graph::NodeId> sub;
    for (graph::NodeId v = 0; v < g.size(); ++v)
      if (rng.chance(1, 2)) sub.push_back(v);
    const auto h = graph::induced_subgraph(g, sub);
    o.check(graph::chromatic_number(h).value() <= graph::chromatic_number(g).value(), "induced subgraph needs more");
  }
  std::size_t free_seen = 0;
  while (free_seen < 200) {
    const auto sys = random_system(1 + rng.below(5), 1 + rng.below(3), rng.below(51), rng);
    if (relsys::is_free(sys, sys.all()).truth != Truth::yes) continue;
    relsys::Subset sub;
    for (auto e : sys.all())
      if (rng.chance(1, 2)) sub.push_back(e);
    o.check(relsys::is_free(sys, sub).truth == Truth::yes && oracle::is_free(sys, sub, sys.kappa()),
            "subset of a free set is not free");
    ++free_seen;
    ++o.instances;
  }
  for (int i = 0; i < 200; ++i, ++o.instances) {
    const auto sys = random_system(2 + rng.below(3), 1 + rng.below(2), 10 + rng.below(50), rng);
    std::size_t prev = 0;
    for (std::size_t d = 0; d <= 2; ++d) {
      const auto ch = graph::chromatic_number(construct::graph_of(build(sys, d)));
      o.check(ch.exact && ch.value() >= prev, "deeper saturation lowered the chromatic number");
      prev = ch.value();
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "chromatic number matches exhaustive search", 120, chromatic_oracle},
      {2, "colouring number matches min over node orders", 120, colouring_number_oracle},
      {3, "transversals match exhaustive choice search", 60, transversal_oracle},
      {4, "freeness hierarchy and witnesses", 300, freeness_hierarchy},
      {5, "witness colourings proper within kappa^2", 300, witness_colouring},
      {6, "colouring dichotomy with bounded exceptions", 300, extraction_dichotomy},
      {7, "family round trips", 180, family_round_trips},
      {8, "graph exp sets empty or full", 60, graph_exp_dichotomy},
      {9, "end-to-end finite incompactness for n = 1, 2, 3", 300, end_to_end},
      {10, "monotonicity battery", 180, monotonicity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && o.failures == 0 && secs <= c.limit_seconds;
    failed += !ok;
    std::printf("%s [%d] %s: %zu instances, %zu failures, %.2fs (limit %.0fs)", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), o.instances, o.failures, secs, c.limit_seconds);
    if (!error.empty()) std::printf("; exception: %s", error.c_str());
    if (!o.first_failure.empty()) std::printf("; %s", o.first_failure.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
