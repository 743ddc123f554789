#include "incwb/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>

#include "incwb/colouring.hpp"
#include "incwb/construct.hpp"
#include "incwb/famfun.hpp"
#include "incwb/incompact.hpp"
#include "incwb/io.hpp"
#include "incwb/random.hpp"
#include "incwb/reductions.hpp"
#include "incwb/relsys.hpp"

namespace incwb::cli {

namespace {

struct Context {
  RunConfig cfg;
  std::string out_path;
  bool json_format = false;
  std::ostream* out = nullptr;
};

// Producers emit a data document; checkers emit only the report.
struct Result {
  Report report;
  std::optional<json> artifact;
};

json names_of(const relsys::RelationSystem& sys, const relsys::Subset& b) {
  json out = json::array();
  for (auto e : b) out.push_back(sys.name(e));
  return out;
}

relsys::Subset subset_or_all(const relsys::RelationSystem& sys, const std::vector<std::string>& names) {
  return names.empty() ? sys.all() : sys.subset_of(names);
}

bool is_family(const json& j) { return j.is_object() && j.contains("members"); }
bool is_graph(const json& j) { return j.is_object() && j.contains("nodes"); }

int finish(Result& r, const Context& ctx) {
  const int code = r.report.exit_code();
  if (r.artifact) {
    if (ctx.out_path.empty()) {
      *ctx.out << r.artifact->dump(2) << '\n';
      return code;
    }
    io::write_json_file(ctx.out_path, *r.artifact);
  } else if (!ctx.out_path.empty()) {
    io::write_json_file(ctx.out_path, r.report.to_json());
  }
  if (ctx.json_format) {
    *ctx.out << r.report.to_json().dump(2) << '\n';
  } else {
    *ctx.out << r.report.summary();
  }
  return code;
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::size_t n = 2, k = 2, kappa = 2, mu = 3, count = 4, nodes = 6, percent = 30, size = 4;
};

Result cmd_gen(const GenArgs& a, const Context& ctx) {
  Stopwatch sw;
  Result r{Report("gen " + a.kind, ctx.cfg), std::nullopt};
  Rng rng(ctx.cfg.seed);
  json params = {{"kind", a.kind}};
  if (a.kind == "hall") {
    params["n"] = a.n;
    r.artifact = io::to_json(famfun::gen_hall(a.n));
  } else if (a.kind == "branches") {
    params["k"] = a.k;
    r.artifact = io::to_json(famfun::gen_branches(a.k));
  } else if (a.kind == "random") {
    params.update({{"kappa", a.kappa}, {"mu", a.mu}, {"count", a.count}});
    r.artifact = io::to_json(famfun::gen_random(a.kappa, a.mu, a.count, ctx.cfg.seed));
  } else if (a.kind == "graph-random") {
    params.update({{"nodes", a.nodes}, {"percent", a.percent}});
    r.artifact = io::to_json(random_graph(a.nodes, a.percent, rng));
  } else {
    params.update({{"size", a.size}, {"kappa", a.kappa}, {"percent", a.percent}});
    r.artifact = io::to_json(random_system(a.size, a.kappa, a.percent, rng));
  }
  r.report.add_stage("gen", params, *r.artifact, Verdict::info, a.kind + " instance generated", params, sw.millis());
  return r;
}

// ---- families ----------------------------------------------------------------

Result cmd_transversal(const std::string& path, const std::vector<std::size_t>& subset, const Context& ctx) {
  Stopwatch sw;
  Result r{Report("transversal", ctx.cfg), std::nullopt};
  const json input = io::read_json_file(path);
  const auto fam = io::family_from_json(input);
  const auto sub = subset.empty() ? fam.all() : subset;
  const auto t = famfun::find_transversal(fam, sub);
  json ev = {{"subfamily", sub}};
  if (t.transversal) {
    ev["choice"] = io::to_json(*t.transversal);
    r.report.add_stage("transversal", input, ev, Verdict::pass, "transversal found", ev, sw.millis());
  } else {
    std::vector<famfun::Value> uni;
    for (auto f : t.blocking) uni.insert(uni.end(), fam.range(f).begin(), fam.range(f).end());
    std::sort(uni.begin(), uni.end());
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
    ev["blocking"] = t.blocking;
    ev["blocking_union"] = uni;
    r.report.add_stage("transversal", input, ev, Verdict::fail,
                       std::to_string(t.blocking.size()) + " members share only " + std::to_string(uni.size()) +
                           " values",
                       ev, sw.millis());
  }
  return r;
}

// ---- freeness ----------------------------------------------------------------

struct FreeArgs {
  std::string path;
  std::vector<std::string> subset;
  bool relaxed = false;
  std::size_t colours = 0;
};

Result cmd_free(const std::string& which, const FreeArgs& a, const Context& ctx) {
  Stopwatch sw;
  Result r{Report(which, ctx.cfg), std::nullopt};
  const json input = io::read_json_file(a.path);
  const auto sys = io::system_from_json(input);
  const auto b = subset_or_all(sys, a.subset);
  const relsys::WitnessOptions opts{a.colours, !a.relaxed};
  json ev = {{"subset", names_of(sys, b)}, {"order_clause", opts.enforce_order_clause}};
  if (a.colours) ev["colour_space"] = a.colours;
  Truth truth = Truth::undecided;
  std::string head;
  if (which == "free") {
    const auto res = relsys::is_free(sys, b, ctx.cfg.cap.search, opts);
    truth = res.truth;
    if (res.witness) ev["witness"] = io::to_json(*res.witness, sys);
    if (!res.note.empty()) ev["note"] = res.note;
    head = truth == Truth::yes ? "free" : truth == Truth::no ? "not free" : "undecided: " + res.note;
  } else if (which == "strongly-free") {
    const auto res = relsys::is_strongly_free(sys, b, ctx.cfg.cap.search, opts);
    truth = res.truth;
    ev["orders_certified"] = res.certificate.size();
    if (res.failing_order) ev["failing_order"] = names_of(sys, *res.failing_order);
    if (!res.note.empty()) ev["note"] = res.note;
    head = truth == Truth::yes ? "strongly free" : truth == Truth::no ? "an ordering admits no colour map"
                                                                      : "undecided: " + res.note;
  } else {
    const auto res = relsys::is_weakly_free(sys, b, ctx.cfg.cap.search, opts);
    truth = res.truth;
    if (res.colouring) {
      json h = json::object();
      for (const auto& [e, c] : *res.colouring) h[sys.name(e)] = c;
      ev["colour"] = h;
    }
    if (!res.note.empty()) ev["note"] = res.note;
    head = truth == Truth::yes ? "weakly free" : truth == Truth::no ? "not weakly free" : "undecided: " + res.note;
  }
  r.report.add_stage(which, input, ev, verdict_of(truth), head, ev, sw.millis());
  return r;
}

Result cmd_lambda_free(const std::string& path, std::size_t lambda, const Context& ctx) {
  Stopwatch sw;
  Result r{Report("lambda-free", ctx.cfg), std::nullopt};
  const json input = io::read_json_file(path);
  json ev = {{"lambda", lambda}};
  Truth truth = Truth::undecided;
  std::string note;
  if (is_family(input)) {
    const auto fam = io::family_from_json(input);
    const auto res = famfun::check_family_lambda_free(fam, lambda, ctx.cfg.cap.search.max_subsets);
    truth = res.truth;
    ev["subsets_checked"] = res.subsets_checked;
    if (res.minimal_failure) ev["minimal_failure"] = *res.minimal_failure;
    note = res.note;
  } else {
    const auto sys = io::system_from_json(input);
    const auto res = relsys::check_lambda_free(sys, lambda, ctx.cfg.cap.search);
    truth = res.truth;
    ev["subsets_checked"] = res.subsets_checked;
    if (res.minimal_failure) ev["minimal_failure"] = names_of(sys, *res.minimal_failure);
    note = res.note;
  }
  if (!note.empty()) ev["note"] = note;
  const std::string head = truth == Truth::yes  ? "every subset of size < " + std::to_string(lambda) + " is free"
                           : truth == Truth::no ? "a small subset is not free"
                                                : "undecided: " + note;
  r.report.add_stage("lambda-free", input, ev, verdict_of(truth), head, ev, sw.millis());
  return r;
}

// ---- reductions -----------------------------------------------------------------

Result cmd_reduce(const std::string& path, const std::vector<std::size_t>& base_in,
                  const std::vector<std::string>& order, std::size_t kappa, const Context& ctx) {
  Stopwatch sw;
  Result r{Report("reduce", ctx.cfg), std::nullopt};
  const json input = io::read_json_file(path);
  json ev;
  if (is_graph(input)) {
    if (kappa == 0) throw InputError("reducing a graph needs --kappa");
    const auto g = io::graph_from_json(input);
    graph::NodeOrder ord = graph::NodeOrder::identity(g.size());
    if (!order.empty()) {
      std::vector<graph::NodeId> seq;
      for (const auto& n : order) seq.push_back(g.index_of(n));
      ord = graph::NodeOrder(seq, g.size());
    }
    const auto sys = reductions::graph_to_system(g, ord, kappa);
    r.artifact = io::to_json(sys);
    ev = {{"source", "graph"}, {"kappa", kappa}, {"pairs_per_relation", sys.relation(0).size()}};
  } else {
    const auto fam = io::family_from_json(input);
    const auto base = base_in.empty() ? fam.all() : base_in;
    const auto sys = reductions::family_to_system(fam, base);
    r.artifact = io::to_json(sys);
    json sizes = json::array();
    for (std::size_t z = 0; z < sys.kappa(); ++z) sizes.push_back(sys.relation(z).size());
    ev = {{"source", "family"}, {"base", base}, {"relation_sizes", sizes}};
  }
  r.report.add_stage("reduce", input, *r.artifact, Verdict::info, "relation system built", ev, sw.millis());
  return r;
}

// ---- construction -------------------------------------------------------------------

struct SaturateArgs {
  std::string path;
  construct::BuildParams build;
};

Result cmd_saturate(const SaturateArgs& a, const Context& ctx) {
  Stopwatch sw;
  Result r{Report("saturate", ctx.cfg), std::nullopt};
  const json input = io::read_json_file(a.path);
  const auto sys = io::system_from_json(input);
  const auto res = construct::saturate(sys, a.build);
  const auto valid = construct::validate_K_a(res.structure, sys);
  r.artifact = io::to_json(res.structure, sys);
  const json ev = {{"points", res.structure.size()},
                   {"achieved_depth", res.achieved_depth},
                   {"witness_cap_hit", res.witness_cap_hit},
                   {"point_guard_hit", res.point_guard_hit},
                   {"valid", valid.valid()}};
  r.report.add_stage("saturate", input, *r.artifact, valid.valid() ? Verdict::pass : Verdict::fail,
                     std::to_string(res.structure.size()) + " points to depth " + std::to_string(res.achieved_depth),
                     ev, sw.millis());
  return r;
}

Result cmd_graph(const std::string& sys_path, const std::string& m_path, const std::vector<std::string>& subset,
                 const Context& ctx) {
  Stopwatch sw;
  Result r{Report("graph", ctx.cfg), std::nullopt};
  const json sj = io::read_json_file(sys_path);
  const json mj = io::read_json_file(m_path);
  const auto sys = io::system_from_json(sj);
  const auto m = io::structure_from_json(mj, sys);
  const auto g = subset.empty() ? construct::graph_of(m) : construct::part_graph(m, sys.subset_of(subset)).graph;
  r.artifact = io::to_json(g);
  const json ev = {{"nodes", g.size()}, {"edges", g.edge_count()}};
  r.report.add_stage("graph", json{sj, mj}, *r.artifact, Verdict::info,
                     std::to_string(g.size()) + " nodes, " + std::to_string(g.edge_count()) + " edges", ev,
                     sw.millis());
  return r;
}

Result cmd_chrom(const std::string& path, std::optional<std::size_t> at_most, const Context& ctx) {
  Stopwatch sw;
  Result r{Report("chrom", ctx.cfg), std::nullopt};
  const json input = io::read_json_file(path);
  const auto g = io::graph_from_json(input);
  if (at_most) {
    const auto res = graph::find_colouring(g, *at_most, ctx.cfg.budget);
    json ev = {{"k", *at_most}, {"steps", res.steps}};
    if (res.colouring) ev["colouring"] = io::to_json(*res.colouring, g);
    r.report.add_stage("chrom", input, ev, verdict_of(res.status),
                       res.status == Truth::yes  ? "colourable with " + std::to_string(*at_most) + " colours"
                       : res.status == Truth::no ? "needs more than " + std::to_string(*at_most) + " colours"
                                                 : "solver budget exhausted",
                       ev, sw.millis());
    return r;
  }
  const auto res = graph::chromatic_number(g, ctx.cfg.budget);
  json ev = {{"exact", res.exact}, {"lower", res.lower}, {"upper", res.upper}, {"steps", res.steps}};
  if (!g.empty()) ev["colouring"] = io::to_json(res.best, g);
  r.report.add_stage("chrom", input, ev, res.exact ? Verdict::pass : Verdict::undecided,
                     res.exact ? "chromatic number " + std::to_string(res.value())
                               : "between " + std::to_string(res.lower) + " and " + std::to_string(res.upper),
                     ev, sw.millis());
  return r;
}

Result cmd_colnum(const std::string& path, const Context& ctx) {
  Stopwatch sw;
  Result r{Report("colnum", ctx.cfg), std::nullopt};
  const json input = io::read_json_file(path);
  const auto g = io::graph_from_json(input);
  const auto cl = graph::colouring_number(g);
  json order = json::array();
  const auto ord = graph::degeneracy_order(g);
  for (auto v : ord.sequence()) order.push_back(g.name(v));
  const json ev = {{"colouring_number", cl}, {"order", order}};
  r.report.add_stage("colnum", input, ev, Verdict::pass, "colouring number " + std::to_string(cl), ev, sw.millis());
  return r;
}

Result cmd_colour_witness(const std::string& sys_path, const std::string& m_path, const std::string& w_path,
                          const Context& ctx) {
  Stopwatch sw;
  Result r{Report("colour-witness", ctx.cfg), std::nullopt};
  const json sj = io::read_json_file(sys_path);
  const json mj = io::read_json_file(m_path);
  const json wj = io::read_json_file(w_path);
  const auto sys = io::system_from_json(sj);
  const auto m = io::structure_from_json(mj, sys);
  const auto w = io::witness_from_json(wj, sys);
  relsys::Subset b;
  for (const auto& [e, c] : w.colour) b.push_back(e);
  const auto wc = construct::colour_from_witness(m, sys, b, w);
  const bool proper = graph::is_proper(wc.part.graph, wc.colouring);
  const auto classes = construct::class_colouring_numbers(m, sys, b, w);
  r.artifact = io::to_json(wc.colouring, wc.part.graph);
  const json ev = {{"proper", proper},
                   {"colours_used", wc.colouring.colours_used()},
                   {"colour_bound", sys.kappa() * sys.kappa()},
                   {"max_exclusion", wc.max_exclusion},
                   {"class_colouring_numbers", classes}};
  const bool ok = proper && wc.colouring.colours_used() <= sys.kappa() * sys.kappa() &&
                  std::all_of(classes.begin(), classes.end(), [&](std::size_t c) { return c <= sys.kappa(); });
  r.report.add_stage("colour-witness", json{sj, mj, wj}, *r.artifact, ok ? Verdict::pass : Verdict::fail,
                     std::to_string(wc.colouring.colours_used()) + " colours on " +
                         std::to_string(wc.part.graph.size()) + " points",
                     ev, sw.millis());
  return r;
}

json case_one_json(const construct::CaseOne& one, const relsys::RelationSystem& sys) {
  json succ = json::object();
  for (std::size_t z = 0; z < one.request.succ.size(); ++z)
    if (one.request.succ[z]) succ[std::to_string(z)] = construct::KaStructure::point_name(*one.request.succ[z]);
  json g = json::object();
  for (const auto& [eps, zeta] : one.g) g[std::to_string(eps)] = zeta;
  return {{"eta", sys.name(one.eta)}, {"g", g}, {"request", {{"succ", succ}, {"level", one.request.level}}}};
}

json case_two_json(const construct::CaseTwo& two, const relsys::RelationSystem& sys) {
  json h = json::object();
  for (const auto& [e, c] : two.h) h[sys.name(e)] = c;
  return {{"h", h},
          {"exp_within_z", two.exp_within_z},
          {"exceptions_bounded", two.exceptions_bounded},
          {"order_clause_holds", two.order_clause.valid()}};
}

Result cmd_extract(const std::string& sys_path, const std::string& m_path, const std::string& c_path,
                   const std::vector<std::string>& order, const Context& ctx) {
  Stopwatch sw;
  Result r{Report("extract", ctx.cfg), std::nullopt};
  const json sj = io::read_json_file(sys_path);
  const json mj = io::read_json_file(m_path);
  const json cj = io::read_json_file(c_path);
  const auto sys = io::system_from_json(sj);
  const auto m = io::structure_from_json(mj, sys);
  const auto c = io::colouring_from_json(cj, construct::graph_of(m));
  std::vector<relsys::ElementId> ord;
  for (const auto& n : order) ord.push_back(sys.index_of(n));
  if (order.empty()) ord = sys.all();
  const auto ex = construct::extract_from_colouring(m, sys, c, ord);
  json ev = {{"notices", ex.notices}};
  std::string head;
  if (ex.is_case_one()) {
    json ones = json::array();
    for (const auto& one : ex.case_one()) ones.push_back(case_one_json(one, sys));
    ev["case"] = 1;
    ev["elements"] = ones;
    head = "case 1 at " + std::to_string(ones.size()) + " element(s)";
  } else {
    ev["case"] = 2;
    ev["case2"] = case_two_json(ex.case_two(), sys);
    head = "case 2";
  }
  r.report.add_stage("extract", json{sj, mj, cj}, ev, Verdict::info, head, ev, sw.millis());
  return r;
}

struct CegarArgs {
  std::string path;
  construct::CegarParams params;
};

json cegar_evidence(const construct::CegarReport& rep, const relsys::RelationSystem& sys) {
  json rounds = json::array();
  for (const auto& rd : rep.rounds) {
    rounds.push_back({{"round", rd.round},
                      {"points", rd.points},
                      {"edges", rd.edges},
                      {"colourable", to_string(rd.colourable)},
                      {"solver_steps", rd.solver_steps},
                      {"extraction", rd.extraction},
                      {"added", rd.added.size()},
                      {"blocked_by_depth", rd.blocked_by_depth}});
  }
  json ev = {{"outcome", to_string(rep.outcome)},
             {"reason", rep.reason},
             {"kappa", rep.kappa},
             {"points", rep.structure.size()},
             {"depth_reached", rep.depth_reached},
             {"rounds", rounds}};
  if (rep.case_two) ev["case2"] = case_two_json(*rep.case_two, sys);
  return ev;
}

Verdict cegar_verdict(construct::CegarOutcome o) {
  return o == construct::CegarOutcome::exceeds_kappa ? Verdict::pass
         : o == construct::CegarOutcome::colourable  ? Verdict::fail
                                                     : Verdict::undecided;
}

Result cmd_cegar(CegarArgs a, const Context& ctx) {
  Stopwatch sw;
  Result r{Report("cegar", ctx.cfg), std::nullopt};
  const json input = io::read_json_file(a.path);
  const auto sys = io::system_from_json(input);
  a.params.solver_budget = ctx.cfg.budget;
  const auto rep = construct::cegar_chromatic(sys, a.params);
  const json ev = cegar_evidence(rep, sys);
  r.report.add_stage("cegar", input, ev, cegar_verdict(rep.outcome),
                     std::string(to_string(rep.outcome)) + ": " + rep.reason, ev, sw.millis());
  return r;
}

// ---- incompactness -------------------------------------------------------------------

struct IncArgs {
  std::string path;
  bool bracket = false;
  std::string partition;
  std::size_t lambda = 0;
  std::size_t chi = 0;
  std::size_t kappa = 0;
};

Result cmd_inc_check(const IncArgs& a, const Context& ctx) {
  Stopwatch sw;
  Result r{Report("inc-check", ctx.cfg), std::nullopt};
  const json input = io::read_json_file(a.path);
  std::size_t chi = a.kappa ? incompact::chi_of_kappa(a.kappa) : a.chi;
  if (a.bracket) {
    if (chi == 0) throw InputError("bracket mode needs --chi or --kappa");
    const auto g = io::graph_from_json(input);
    const auto v = incompact::check_inc_bracket(g, a.lambda, chi, ctx.cfg.budget, incompact::kBracketScanCap,
                                                ctx.cfg.seed);
    json ev = {{"lambda", a.lambda},
               {"chi", chi},
               {"grade", to_string(v.grade)},
               {"subsets_checked", v.subsets_checked},
               {"whole_lower", v.whole.lower},
               {"whole_upper", v.whole.upper},
               {"reason", v.reason}};
    if (v.small_witness) {
      json w = json::array();
      for (auto x : *v.small_witness) w.push_back(g.name(x));
      ev["small_witness"] = w;
    }
    r.report.add_stage("inc-bracket", input, ev, verdict_of(v.truth), v.reason, ev, sw.millis());
    return r;
  }
  if (!a.partition.empty()) {
    if (chi == 0) throw InputError("partition mode needs --chi or --kappa");
    const json pj = io::read_json_file(a.partition);
    incompact::PlusVerdict v;
    if (input.contains("graphs")) {
      const auto c = io::chain_from_json(input);
      std::vector<incompact::PartitionCertificate> certs;
      if (!pj.contains("certificates")) throw InputError("chain form needs {\"certificates\":[...]}");
      for (const auto& x : pj["certificates"]) certs.push_back(io::partition_from_json(x));
      v = incompact::check_inc_plus(c, certs, chi);
    } else {
      v = incompact::check_inc_plus(io::graph_from_json(input), io::partition_from_json(pj), chi);
    }
    json ev = {{"chi", chi}, {"colouring_numbers", v.colouring_numbers}, {"reason", v.reason}};
    if (v.failing_part) ev["failing_part"] = *v.failing_part;
    if (v.failing_index) ev["failing_index"] = *v.failing_index;
    r.report.add_stage("inc-plus", json{input, pj}, ev, verdict_of(v.truth), v.reason, ev, sw.millis());
    return r;
  }
  auto c = io::chain_from_json(input);
  if (chi) c.chi0 = c.chi1 = chi;
  const auto v = incompact::check_inc_chain(c, ctx.cfg.budget);
  json per = json::array();
  for (const auto& e : v.evidence) {
    per.push_back({{"index", e.index},
                   {"nodes", e.nodes},
                   {"chromatic_lower", e.chromatic.lower},
                   {"chromatic_upper", e.chromatic.upper},
                   {"passes", to_string(e.passes)}});
  }
  json ev = {{"chi0", c.chi0}, {"chi1", c.chi1}, {"per_index", per}, {"structural_faults", v.structural_faults},
             {"reason", v.reason}};
  if (v.index) ev["index"] = *v.index;
  r.report.add_stage("inc-chain", input, ev, verdict_of(v.truth), v.reason, ev, sw.millis());
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-scale workbench for chromatic incompactness constructions", "incwb"};
  app.fallthrough();
  app.require_subcommand(1);

  Context ctx;
  ctx.out = &out;
  std::string cap_text;
  std::string format = "text";
  app.add_option("-o,--out", ctx.out_path, "Write the output document here");
  app.add_option("--seed", ctx.cfg.seed, "Seed for every random choice");
  app.add_option("--cap", cap_text, "small | medium | custom:<n> (default from INCWB_CAP)");
  app.add_option("--budget", ctx.cfg.budget, "Solver step budget");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::function<Result()> action;

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("kind", gen.kind, "hall | branches | random | graph-random | system-random")
      ->required()
      ->check(CLI::IsMember({"hall", "branches", "random", "graph-random", "system-random"}));
  g->add_option("--n", gen.n);
  g->add_option("--k", gen.k);
  g->add_option("--kappa", gen.kappa);
  g->add_option("--mu", gen.mu);
  g->add_option("--count", gen.count);
  g->add_option("--nodes", gen.nodes);
  g->add_option("--percent", gen.percent);
  g->add_option("--size", gen.size);
  g->callback([&] { action = [&] { return cmd_gen(gen, ctx); }; });

  std::string file1, file2, file3;
  std::vector<std::size_t> member_subset;
  auto* tr = app.add_subcommand("transversal", "Find a transversal of a family");
  tr->add_option("family", file1)->required();
  tr->add_option("--subset", member_subset)->delimiter(',');
  tr->callback([&] { action = [&] { return cmd_transversal(file1, member_subset, ctx); }; });

  FreeArgs fa;
  for (const char* name : {"free", "strongly-free", "weakly-free"}) {
    auto* sc = app.add_subcommand(name, std::string("Decide whether a subset is ") + name);
    sc->add_option("system", fa.path)->required();
    sc->add_option("--subset", fa.subset)->delimiter(',');
    sc->add_flag("--relaxed", fa.relaxed, "Drop the ordering clause");
    sc->add_option("--colours", fa.colours, "Colour space for h (default kappa)");
    const std::string which = name;
    sc->callback([&, which] { action = [&, which] { return cmd_free(which, fa, ctx); }; });
  }

  std::size_t lambda = 0;
  auto* lf = app.add_subcommand("lambda-free", "Check that every small subset is free");
  lf->add_option("input", file1, "system or family file")->required();
  lf->add_option("--lambda", lambda)->required();
  lf->callback([&] { action = [&] { return cmd_lambda_free(file1, lambda, ctx); }; });

  std::vector<std::size_t> base;
  std::vector<std::string> order;
  std::size_t reduce_kappa = 0;
  auto* rd = app.add_subcommand("reduce", "Family or graph to relation system");
  rd->add_option("input", file1)->required();
  rd->add_option("--base", base, "member order")->delimiter(',');
  rd->add_option("--order", order, "node order for graphs")->delimiter(',');
  rd->add_option("--kappa", reduce_kappa);
  rd->callback([&] { action = [&] { return cmd_reduce(file1, base, order, reduce_kappa, ctx); }; });

  SaturateArgs sa;
  auto* st = app.add_subcommand("saturate", "Build a saturated structure");
  st->add_option("system", sa.path)->required();
  st->add_option("--depth", sa.build.depth);
  st->add_option("--witness-cap", sa.build.witness_cap);
  st->add_option("--u-cap", sa.build.u_cap);
  st->add_option("--max-points", sa.build.max_points);
  st->callback([&] { action = [&] { return cmd_saturate(sa, ctx); }; });

  std::vector<std::string> subset;
  auto* gr = app.add_subcommand("graph", "Graph of a structure");
  gr->add_option("system", file1)->required();
  gr->add_option("structure", file2)->required();
  gr->add_option("--subset", subset, "restrict to points labelled in these elements")->delimiter(',');
  gr->callback([&] { action = [&] { return cmd_graph(file1, file2, subset, ctx); }; });

  std::optional<std::size_t> at_most;
  auto* ch = app.add_subcommand("chrom", "Chromatic number");
  ch->add_option("graph", file1)->required();
  ch->add_option("--at-most", at_most, "only decide colourability with this many colours");
  ch->callback([&] { action = [&] { return cmd_chrom(file1, at_most, ctx); }; });

  auto* cn = app.add_subcommand("colnum", "Colouring number");
  cn->add_option("graph", file1)->required();
  cn->callback([&] { action = [&] { return cmd_colnum(file1, ctx); }; });

  auto* cw = app.add_subcommand("colour-witness", "Colour a structure from a freeness witness");
  cw->add_option("system", file1)->required();
  cw->add_option("structure", file2)->required();
  cw->add_option("witness", file3)->required();
  cw->callback([&] { action = [&] { return cmd_colour_witness(file1, file2, file3, ctx); }; });

  auto* ex = app.add_subcommand("extract", "Run the colouring dichotomy");
  ex->add_option("system", file1)->required();
  ex->add_option("structure", file2)->required();
  ex->add_option("colouring", file3)->required();
  ex->add_option("--order", order)->delimiter(',');
  ex->callback([&] { action = [&] { return cmd_extract(file1, file2, file3, order, ctx); }; });

  CegarArgs ca;
  auto* cg = app.add_subcommand("cegar", "Colour, extract and extend until decided");
  cg->add_option("system", ca.path)->required();
  cg->add_option("--kappa", ca.params.kappa);
  cg->add_option("--initial-depth", ca.params.initial_depth);
  cg->add_option("--max-depth", ca.params.max_depth);
  cg->add_option("--max-rounds", ca.params.max_rounds);
  cg->callback([&] { action = [&] { return cmd_cegar(ca, ctx); }; });

  IncArgs ia;
  auto* ic = app.add_subcommand("inc-check", "Incompactness checks on chains and graphs");
  ic->add_option("input", ia.path, "chain file, or graph file with --bracket / --partition")->required();
  ic->add_flag("--bracket", ia.bracket);
  ic->add_option("--partition", ia.partition);
  ic->add_option("--lambda", ia.lambda);
  ic->add_option("--chi", ia.chi);
  ic->add_option("--kappa", ia.kappa, "sets chi = kappa + 1");
  ic->callback([&] { action = [&] { return cmd_inc_check(ia, ctx); }; });

  std::string suite_name;
  auto* su = app.add_subcommand("suite", "Seeded property battery");
  su->add_option("name", suite_name)->required()->check(CLI::IsMember(suite_names()));
  su->callback([&] { action = [&] { return Result{run_suite(suite_name, ctx.cfg), std::nullopt}; }; });

  std::size_t demo_n = 2;
  auto* dm = app.add_subcommand("demo", "End-to-end finite incompactness demonstration");
  dm->add_option("--n", demo_n);
  dm->callback([&] { action = [&] { return Result{demo_incompactness(demo_n, ctx.cfg), std::nullopt}; }; });

  auto* pl = app.add_subcommand("pipeline", "Run a pipeline description file");
  pl->add_option("file", file1)->required();
  pl->callback([&] { action = [&] { return Result{run_pipeline(io::read_json_file(file1), ctx.cfg), std::nullopt}; }; });

  std::vector<std::string> argv_store{"incwb"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kBadInput;
  }

  try {
    ctx.cfg.cap = cap_text.empty() ? default_cap() : parse_cap(cap_text);
    ctx.json_format = format == "json";
    Result r = action();
    return finish(r, ctx);
  } catch (const InputError& e) {
    err << "incwb: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace incwb::cli
