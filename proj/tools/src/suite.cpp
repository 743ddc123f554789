#include <algorithm>
#include <functional>

#include "incwb/cli/cli.hpp"
#include "incwb/colouring.hpp"
#include "incwb/construct.hpp"
#include "incwb/famfun.hpp"
#include "incwb/incompact.hpp"
#include "incwb/random.hpp"
#include "incwb/reductions.hpp"

namespace incwb::cli {

namespace {

// Each property returns the number of failing instances and notes the first.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t undecided = 0;
  std::string first_failure;

  void fail(std::size_t i, const std::string& what) {
    if (failed++ == 0) first_failure = "instance " + std::to_string(i) + ": " + what;
  }
  Verdict verdict() const { return failed ? Verdict::fail : undecided ? Verdict::undecided : Verdict::pass; }
  json evidence() const {
    json j = {{"checked", checked}, {"failed", failed}, {"undecided", undecided}};
    if (!first_failure.empty()) j["first_failure"] = first_failure;
    return j;
  }
};

using Property = std::function<Tally(const RunConfig&, Rng&)>;

Tally graph_properties(const RunConfig& cfg, Rng& rng) {
  Tally t;
  for (std::size_t i = 0; i < cfg.cap.instances; ++i, ++t.checked) {
    const auto g = random_graph(1 + rng.below(8), 20 + rng.below(50), rng);
    const auto ch = graph::chromatic_number(g, cfg.budget);
    if (!ch.exact) {
      ++t.undecided;
      continue;
    }
    if (!graph::is_proper(g, ch.best) || ch.best.colours_used() != ch.value()) t.fail(i, "best colouring mismatch");
    if (ch.value() > 0 && graph::find_colouring(g, ch.value() - 1, cfg.budget).status != Truth::no) {
      t.fail(i, "colouring below the chromatic number");
    }
    const auto cl = graph::colouring_number(g);
    if (ch.value() > cl) t.fail(i, "chromatic number exceeds colouring number");
    const auto greedy = graph::greedy_colour(g, graph::degeneracy_order(g));
    if (!graph::is_proper(g, greedy) || greedy.colours_used() > cl) t.fail(i, "greedy over degeneracy order");
    std::vector<graph::NodeId> sub;
    for (std::size_t v = 0; v < g.size(); ++v)
      if (rng.chance(1, 2)) sub.push_back(v);
    const auto sc = graph::chromatic_number(graph::induced_subgraph(g, sub), cfg.budget);
    if (sc.exact && sc.value() > ch.value()) t.fail(i, "induced subgraph needs more colours");
  }
  return t;
}

Tally relsys_properties(const RunConfig& cfg, Rng& rng) {
  Tally t;
  for (std::size_t i = 0; i < cfg.cap.instances; ++i, ++t.checked) {
    const auto sys = random_system(1 + rng.below(4), 1 + rng.below(3), rng.below(51), rng);
    const auto b = sys.all();
    const auto strong = relsys::is_strongly_free(sys, b, cfg.cap.search);
    const auto free = relsys::is_free(sys, b, cfg.cap.search);
    const auto weak = relsys::is_weakly_free(sys, b, cfg.cap.search);
    if (strong.truth == Truth::undecided || free.truth == Truth::undecided || weak.truth == Truth::undecided) {
      ++t.undecided;
      continue;
    }
    if (strong.truth == Truth::yes && free.truth != Truth::yes) t.fail(i, "strongly free but not free");
    if (free.truth == Truth::yes && weak.truth != Truth::yes) t.fail(i, "free but not weakly free");
    if (free.witness && !relsys::verify_witness(sys, b, *free.witness).valid()) t.fail(i, "witness rejected");
    if (free.truth == Truth::yes) {
      relsys::Subset sub;
      for (auto e : b)
        if (rng.chance(1, 2)) sub.push_back(e);
      if (relsys::is_free(sys, sub, cfg.cap.search).truth == Truth::no) t.fail(i, "subset of a free set not free");
    }
  }
  return t;
}

Tally famfun_properties(const RunConfig& cfg, Rng& rng) {
  Tally t;
  for (std::size_t i = 0; i < cfg.cap.instances; ++i, ++t.checked) {
    const auto fam = famfun::gen_random(1 + rng.below(3), 1 + rng.below(5), rng.below(7), rng.next());
    const auto r = famfun::find_transversal(fam, fam.all());
    if (r.transversal) {
      if (!famfun::is_valid_transversal(fam, fam.all(), *r.transversal)) t.fail(i, "invalid transversal");
    } else {
      std::vector<famfun::Value> uni;
      for (auto f : r.blocking) uni.insert(uni.end(), fam.range(f).begin(), fam.range(f).end());
      std::sort(uni.begin(), uni.end());
      uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
      if (uni.size() >= r.blocking.size()) t.fail(i, "blocking set does not violate Hall's condition");
    }
    const auto d = famfun::is_free_family(fam, fam.all(), fam.kappa());
    if (d.decomposition && !famfun::is_valid_decomposition(fam, fam.all(), *d.decomposition)) {
      t.fail(i, "invalid decomposition");
    }
    if (d.truth == Truth::undecided) ++t.undecided;
  }
  return t;
}

Tally construct_properties(const RunConfig& cfg, Rng& rng) {
  Tally t;
  for (std::size_t i = 0; i < cfg.cap.instances; ++i, ++t.checked) {
    const auto sys = random_system(2 + rng.below(3), 1 + rng.below(2), 15 + rng.below(30), rng);
    construct::BuildParams bp;
    bp.depth = 1 + rng.below(2);
    bp.witness_cap = 8;
    bp.max_points = 400;
    const auto m = construct::saturate(sys, bp).structure;
    if (!construct::validate_K_a(m, sys).valid()) t.fail(i, "saturated structure invalid");
    const auto free = relsys::is_free(sys, sys.all(), cfg.cap.search);
    if (free.witness) {
      const auto wc = construct::colour_from_witness(m, sys, sys.all(), *free.witness);
      const auto k = sys.kappa();
      if (!graph::is_proper(wc.part.graph, wc.colouring) || wc.colouring.colour_bound() > k * k) {
        t.fail(i, "witness colouring improper or too many colours");
      }
      const auto cls = construct::class_colouring_numbers(m, sys, sys.all(), *free.witness);
      if (std::any_of(cls.begin(), cls.end(), [&](std::size_t c) { return c > k; })) t.fail(i, "class colouring number");
    }
    const auto g = construct::graph_of(m);
    const auto c = graph::find_colouring(g, sys.kappa(), cfg.budget);
    if (c.status != Truth::yes) continue;
    const auto ex = construct::extract_from_colouring(m, sys, *c.colouring, sys.all());
    if (!ex.is_case_one()) {
      const auto& two = ex.case_two();
      relsys::Subset dom;
      for (const auto& [e, h] : two.h) dom.push_back(e);
      relsys::FreenessWitness w{two.h, {}};
      for (auto e : sys.all())
        if (two.h.count(e)) w.order.push_back(e);
      for (auto e : dom)
        if (relsys::exp_set(sys, dom, e, w).size() >= sys.kappa()) t.fail(i, "case 2 exception set too large");
    }
  }
  return t;
}

Tally reductions_properties(const RunConfig& cfg, Rng& rng) {
  Tally t;
  for (std::size_t i = 0; i < cfg.cap.instances; ++i, ++t.checked) {
    const auto fam = famfun::gen_random(1 + rng.below(3), 2 + rng.below(4), 1 + rng.below(6), rng.next());
    auto base = fam.all();
    rng.shuffle(base);
    const auto sys = reductions::family_to_system(fam, base);
    const auto d = famfun::is_free_family(fam, fam.all(), fam.kappa());
    if (d.decomposition) {
      const reductions::PairingScheme scheme(fam.kappa());
      const auto w = reductions::decomposition_to_witness(fam, *d.decomposition, base, scheme);
      if (!relsys::verify_witness(sys, fam.all(), w, {scheme.colours(), true}).valid()) t.fail(i, "round trip A");
      const auto part = reductions::witness_to_partition(fam, w, base, scheme.colours());
      for (const auto& [key, members] : part.pieces) {
        if (!famfun::is_valid_transversal(fam, members, part.choices.at(key)) ||
            !famfun::find_transversal(fam, members).transversal) {
          t.fail(i, "round trip B");
        }
      }
    }
    const auto g = random_graph(1 + rng.below(10), rng.below(70), rng);
    const auto gs = reductions::graph_to_system(g, graph::NodeOrder::identity(g.size()), 1 + rng.below(3));
    if (!reductions::exp_dichotomy_check(gs, reductions::random_exp_samples(gs, 4, rng.next())).holds) {
      t.fail(i, "exp dichotomy");
    }
  }
  return t;
}

Tally incompact_properties(const RunConfig& cfg, Rng& rng) {
  Tally t;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) t.fail(t.checked, what);
    ++t.checked;
  };
  expect(incompact::check_inc_bracket(graph::complete_graph(4), 4, 4, cfg.budget).truth == Truth::yes, "K4 bracket");
  expect(incompact::check_inc_bracket(graph::complete_graph(4), 5, 4, cfg.budget).truth == Truth::no, "K4 lambda 5");
  expect(incompact::check_inc_bracket(graph::cycle_graph(9), 9, 3, cfg.budget).truth == Truth::yes, "C9 bracket");
  expect(incompact::check_inc_plus(graph::cycle_graph(5), {{{"0", "1", "2"}, {"3", "4"}}, {}}, 3).truth == Truth::yes,
         "C5 arcs");
  expect(incompact::check_inc_plus(graph::complete_graph(4), {{{"0", "1", "2", "3"}}, {}}, 4).truth == Truth::no,
         "K4 single part");
  for (std::size_t i = 0; i < cfg.cap.instances; ++i) {
    const auto g = random_graph(1 + rng.below(7), 30 + rng.below(50), rng);
    const auto lambda = 1 + rng.below(g.size() + 1);
    const auto ch = graph::chromatic_number(g, cfg.budget).value();
    // True exactly on an interval of chi ending at or below ch.
    std::vector<std::size_t> trues;
    for (std::size_t chi = 1; chi <= ch + 2; ++chi) {
      const auto v = incompact::check_inc_bracket(g, lambda, chi, cfg.budget);
      if (v.truth == Truth::yes) trues.push_back(chi);
      if (chi > ch) expect(v.truth == Truth::no, "whole-graph clause above ch");
    }
    expect(trues.empty() || trues.back() - trues.front() + 1 == trues.size(), "true values not contiguous in chi");
  }
  return t;
}

const std::vector<std::pair<std::string, Property>>& properties() {
  static const std::vector<std::pair<std::string, Property>> all = {
      {"graph-core", graph_properties}, {"relsys", relsys_properties},         {"famfun", famfun_properties},
      {"construct", construct_properties}, {"reductions", reductions_properties}, {"incompact", incompact_properties},
  };
  return all;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names{"all"};
  for (const auto& [n, p] : properties()) names.push_back(n);
  return names;
}

Report run_suite(std::string_view which, const RunConfig& cfg) {
  Report rep("suite " + std::string(which), cfg);
  std::size_t k = 0;
  for (const auto& [name, prop] : properties()) {
    ++k;
    if (which != "all" && which != name) continue;
    Rng rng(cfg.seed * 1000003 + k);
    Stopwatch sw;
    const Tally t = prop(cfg, rng);
    rep.add_stage(name, {{"seed", cfg.seed}, {"instances", cfg.cap.instances}}, t.evidence(), t.verdict(),
                  std::to_string(t.checked - t.failed) + "/" + std::to_string(t.checked) + " instances hold" +
                      (t.first_failure.empty() ? "" : "; " + t.first_failure),
                  t.evidence(), sw.millis());
  }
  return rep;
}

}  // namespace incwb::cli
