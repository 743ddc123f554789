#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "incwb/cli/cli.hpp"
#include "incwb/colouring.hpp"
#include "incwb/construct.hpp"
#include "incwb/famfun.hpp"
#include "incwb/incompact.hpp"
#include "incwb/io.hpp"
#include "incwb/reductions.hpp"

namespace incwb::cli {

namespace {

json edge_list(const graph::Graph& g, std::size_t limit) {
  json out = json::array();
  for (const auto& e : g.edges()) {
    if (out.size() == limit) break;
    out.push_back({g.name(e.u), g.name(e.v)});
  }
  return out;
}

json cegar_summary(const construct::CegarReport& rep) {
  json rounds = json::array();
  for (const auto& rd : rep.rounds) {
    rounds.push_back({{"round", rd.round},
                      {"points", rd.points},
                      {"edges", rd.edges},
                      {"colourable", to_string(rd.colourable)},
                      {"extraction", rd.extraction},
                      {"added", rd.added.size()},
                      {"blocked_by_depth", rd.blocked_by_depth}});
  }
  return {{"outcome", to_string(rep.outcome)},
          {"reason", rep.reason},
          {"kappa", rep.kappa},
          {"points", rep.structure.size()},
          {"depth_reached", rep.depth_reached},
          {"rounds", rounds}};
}

Verdict pass_if(bool b) { return b ? Verdict::pass : Verdict::fail; }

Verdict cegar_verdict_name(construct::CegarOutcome o) {
  return o == construct::CegarOutcome::exceeds_kappa ? Verdict::pass
         : o == construct::CegarOutcome::colourable  ? Verdict::fail
                                                     : Verdict::undecided;
}

}  // namespace

Report demo_incompactness(std::size_t n, const RunConfig& cfg) {
  if (n == 0) throw InputError("demo needs n >= 1");
  Report rep("demo --n " + std::to_string(n), cfg);
  const json params = {{"n", n}};

  Stopwatch sw;
  const auto fam = famfun::gen_hall(n);
  const json famj = io::to_json(fam);
  rep.add_stage("gen-hall", params, famj, Verdict::info,
                std::to_string(n + 1) + " copies of the identity on " + std::to_string(n) + " values",
                {{"members", fam.size()}, {"kappa", fam.kappa()}, {"mu", fam.mu()}}, sw.millis());

  sw = Stopwatch{};
  const auto small = famfun::check_family_lambda_free(fam, n + 1, cfg.cap.search.max_subsets);
  json ev = {{"lambda", n + 1}, {"subsets_checked", small.subsets_checked}};
  if (small.minimal_failure) ev["minimal_failure"] = *small.minimal_failure;
  rep.add_stage("small-subfamilies", famj, ev, verdict_of(small.truth),
                "every subfamily of size <= " + std::to_string(n) + " has a transversal", ev, sw.millis());

  sw = Stopwatch{};
  const auto whole = famfun::find_transversal(fam, fam.all());
  ev = {{"has_transversal", whole.transversal.has_value()}, {"blocking", whole.blocking}};
  rep.add_stage("whole-family", famj, ev, pass_if(!whole.transversal),
                "all " + std::to_string(fam.size()) + " members share " + std::to_string(n) + " values: no transversal",
                ev, sw.millis());

  sw = Stopwatch{};
  const auto sys = reductions::family_to_system(fam, fam.all());
  const json sysj = io::to_json(sys);
  json sizes = json::array();
  for (std::size_t z = 0; z < sys.kappa(); ++z) sizes.push_back(sys.relation(z).size());
  rep.add_stage("reduce", famj, sysj, Verdict::info, "relation system on the members",
                {{"relation_sizes", sizes}}, sw.millis());

  sw = Stopwatch{};
  const auto sys_small = relsys::check_lambda_free(sys, n + 1, cfg.cap.search);
  ev = {{"lambda", n + 1}, {"subsets_checked", sys_small.subsets_checked}};
  if (!sys_small.note.empty()) ev["note"] = sys_small.note;
  rep.add_stage("system-small-subsets-free", sysj, ev, verdict_of(sys_small.truth),
                "every subset of size <= " + std::to_string(n) + " is free", ev, sw.millis());

  sw = Stopwatch{};
  const auto sys_whole = relsys::is_free(sys, sys.all(), cfg.cap.search);
  ev = {{"truth", to_string(sys_whole.truth)}};
  const Truth not_free = sys_whole.truth == Truth::no    ? Truth::yes
                         : sys_whole.truth == Truth::yes ? Truth::no
                                                         : Truth::undecided;
  rep.add_stage("system-not-free", sysj, ev, verdict_of(not_free), "the whole ground set is not free", ev, sw.millis());

  sw = Stopwatch{};
  const reductions::PairingScheme scheme(fam.kappa());
  std::size_t verified = 0;
  std::size_t tried = 0;
  for_each_k_subset(fam.size(), n, [&](const std::vector<std::size_t>& sub) {
    ++tried;
    const auto d = famfun::is_free_family(fam, sub, fam.kappa());
    if (!d.decomposition) return true;
    const auto w = reductions::decomposition_to_witness(fam, *d.decomposition, fam.all(), scheme);
    if (relsys::verify_witness(sys, sub, w, {scheme.colours(), true}).valid()) ++verified;
    return true;
  });
  ev = {{"subfamilies", tried}, {"witnesses_verified", verified}, {"colour_space", scheme.colours()}};
  rep.add_stage("witness-round-trip", sysj, ev, pass_if(verified == tried),
                std::to_string(verified) + "/" + std::to_string(tried) + " maximal proper subfamilies yield verified witnesses",
                ev, sw.millis());

  sw = Stopwatch{};
  construct::CegarParams cp;
  cp.max_depth = std::max<std::size_t>(3, n);
  cp.solver_budget = cfg.budget;
  const auto cr = construct::cegar_chromatic(sys, cp);
  ev = cegar_summary(cr);
  rep.add_stage("cegar", sysj, ev, cegar_verdict_name(cr.outcome),
                std::string(to_string(cr.outcome)) + ": " + cr.reason, ev, sw.millis());

  sw = Stopwatch{};
  const auto g = construct::graph_of(cr.structure);
  const auto chrom = graph::chromatic_number(g, cfg.budget);
  ev = {{"nodes", g.size()},
        {"edges", g.edge_count()},
        {"edge_sample", edge_list(g, 12)},
        {"chromatic_exact", chrom.exact},
        {"chromatic", chrom.upper},
        {"kappa", n}};
  const bool certified = cr.outcome == construct::CegarOutcome::exceeds_kappa;
  const Verdict gv = chrom.exact && certified ? pass_if(chrom.value() > n) : Verdict::undecided;
  rep.add_stage("chromatic", io::to_json(g), ev, gv,
                "G_M has " + std::to_string(g.edge_count()) + " edges and chromatic number " +
                    std::to_string(chrom.upper) + " > " + std::to_string(n),
                ev, sw.millis());
  return rep;
}

// ---- pipelines -----------------------------------------------------------------

namespace {

enum class Kind { family, system, structure, graph };
enum class Param { count, text };

struct OpSpec {
  std::vector<std::pair<std::string, Param>> required;
  std::vector<std::pair<std::string, Param>> optional;
  std::vector<Kind> needs;
  std::optional<Kind> produces;
};

const std::map<std::string, OpSpec>& op_table() {
  static const std::map<std::string, OpSpec> table = {
      {"gen-hall", {{{"n", Param::count}}, {}, {}, Kind::family}},
      {"gen-branches", {{{"k", Param::count}}, {}, {}, Kind::family}},
      {"gen-random", {{{"kappa", Param::count}, {"mu", Param::count}, {"count", Param::count}}, {}, {}, Kind::family}},
      {"load-family", {{{"path", Param::text}}, {}, {}, Kind::family}},
      {"load-system", {{{"path", Param::text}}, {}, {}, Kind::system}},
      {"load-graph", {{{"path", Param::text}}, {}, {}, Kind::graph}},
      {"transversal", {{}, {}, {Kind::family}, std::nullopt}},
      {"family-lambda-free", {{{"lambda", Param::count}}, {}, {Kind::family}, std::nullopt}},
      {"reduce", {{}, {}, {Kind::family}, Kind::system}},
      {"reduce-graph", {{{"kappa", Param::count}}, {}, {Kind::graph}, Kind::system}},
      {"free", {{}, {}, {Kind::system}, std::nullopt}},
      {"strongly-free", {{}, {}, {Kind::system}, std::nullopt}},
      {"weakly-free", {{}, {}, {Kind::system}, std::nullopt}},
      {"lambda-free", {{{"lambda", Param::count}}, {}, {Kind::system}, std::nullopt}},
      {"saturate",
       {{{"depth", Param::count}},
        {{"witness_cap", Param::count}, {"u_cap", Param::count}, {"max_points", Param::count}},
        {Kind::system},
        Kind::structure}},
      {"graph", {{}, {}, {Kind::structure}, Kind::graph}},
      {"chrom", {{}, {}, {Kind::graph}, std::nullopt}},
      {"colnum", {{}, {}, {Kind::graph}, std::nullopt}},
      {"cegar",
       {{},
        {{"kappa", Param::count}, {"max_depth", Param::count}, {"initial_depth", Param::count}},
        {Kind::system},
        Kind::structure}},
      {"inc-bracket", {{{"lambda", Param::count}, {"chi", Param::count}}, {}, {Kind::graph}, std::nullopt}},
  };
  return table;
}

bool type_ok(const json& v, Param p) { return p == Param::count ? v.is_number_unsigned() : v.is_string(); }

void validate_pipeline(const json& spec) {
  if (!spec.is_object() || !spec.contains("stages") || !spec["stages"].is_array()) {
    throw InputError("pipeline needs a \"stages\" array");
  }
  std::set<Kind> have;
  std::size_t i = 0;
  for (const auto& st : spec["stages"]) {
    const std::string where = "stage " + std::to_string(i++);
    if (!st.is_object() || !st.contains("op") || !st["op"].is_string()) throw InputError(where + ": missing \"op\"");
    const auto name = st["op"].get<std::string>();
    const auto it = op_table().find(name);
    if (it == op_table().end()) throw InputError(where + ": unknown op '" + name + "'");
    const auto& op = it->second;
    for (const auto& [key, val] : st.items()) {
      if (key == "op") continue;
      auto match = [&](const auto& list) {
        return std::find_if(list.begin(), list.end(), [&](const auto& p) { return p.first == key; });
      };
      auto r = match(op.required);
      auto o = match(op.optional);
      if (r == op.required.end() && o == op.optional.end()) throw InputError(where + ": unknown parameter '" + key + "'");
      const Param p = r != op.required.end() ? r->second : o->second;
      if (!type_ok(val, p)) throw InputError(where + ": parameter '" + key + "' has the wrong type");
    }
    for (const auto& [key, p] : op.required) {
      if (!st.contains(key)) throw InputError(where + ": missing parameter '" + key + "'");
    }
    for (Kind k : op.needs) {
      if (!have.count(k)) throw InputError(where + ": '" + name + "' has no input from earlier stages");
    }
    if (op.produces) have.insert(*op.produces);
  }
}

}  // namespace

Report run_pipeline(const json& spec, const RunConfig& base_cfg) {
  validate_pipeline(spec);
  RunConfig cfg = base_cfg;
  if (spec.contains("seed")) cfg.seed = spec["seed"].get<std::uint64_t>();
  if (spec.contains("budget")) cfg.budget = spec["budget"].get<std::uint64_t>();
  Report rep("pipeline", cfg);

  std::optional<famfun::FunctionFamily> fam;
  std::optional<relsys::RelationSystem> sys;
  std::optional<construct::KaStructure> m;
  std::optional<graph::Graph> g;

  for (const auto& st : spec["stages"]) {
    Stopwatch sw;
    const auto op = st["op"].get<std::string>();
    auto count = [&](const char* key, std::size_t fallback) {
      return st.contains(key) ? st[key].get<std::size_t>() : fallback;
    };
    if (op == "gen-hall" || op == "gen-branches" || op == "gen-random" || op == "load-family") {
      fam = op == "gen-hall"       ? famfun::gen_hall(count("n", 0))
            : op == "gen-branches" ? famfun::gen_branches(count("k", 0))
            : op == "gen-random"   ? famfun::gen_random(count("kappa", 0), count("mu", 0), count("count", 0), cfg.seed)
                                   : io::family_from_json(io::read_json_file(st["path"].get<std::string>()));
      const json out = io::to_json(*fam);
      rep.add_stage(op, st, out, Verdict::info, std::to_string(fam->size()) + " members", {{"members", fam->size()}},
                    sw.millis());
    } else if (op == "load-system") {
      sys = io::system_from_json(io::read_json_file(st["path"].get<std::string>()));
      rep.add_stage(op, st, io::to_json(*sys), Verdict::info, std::to_string(sys->size()) + " elements",
                    {{"elements", sys->size()}}, sw.millis());
    } else if (op == "load-graph") {
      g = io::graph_from_json(io::read_json_file(st["path"].get<std::string>()));
      rep.add_stage(op, st, io::to_json(*g), Verdict::info, std::to_string(g->size()) + " nodes",
                    {{"nodes", g->size()}}, sw.millis());
    } else if (op == "transversal") {
      const auto t = famfun::find_transversal(*fam, fam->all());
      json ev = {{"found", t.transversal.has_value()}, {"blocking", t.blocking}};
      if (t.transversal) ev["choice"] = io::to_json(*t.transversal);
      rep.add_stage(op, io::to_json(*fam), ev, t.transversal ? Verdict::pass : Verdict::fail,
                    t.transversal ? "transversal found" : "no transversal", ev, sw.millis());
    } else if (op == "family-lambda-free") {
      const auto r = famfun::check_family_lambda_free(*fam, count("lambda", 0), cfg.cap.search.max_subsets);
      json ev = {{"subsets_checked", r.subsets_checked}};
      if (r.minimal_failure) ev["minimal_failure"] = *r.minimal_failure;
      rep.add_stage(op, io::to_json(*fam), ev, verdict_of(r.truth), std::string(to_string(r.truth)), ev, sw.millis());
    } else if (op == "reduce") {
      sys = reductions::family_to_system(*fam, fam->all());
      rep.add_stage(op, io::to_json(*fam), io::to_json(*sys), Verdict::info, "relation system built",
                    {{"elements", sys->size()}}, sw.millis());
    } else if (op == "reduce-graph") {
      sys = reductions::graph_to_system(*g, graph::NodeOrder::identity(g->size()), count("kappa", 0));
      rep.add_stage(op, io::to_json(*g), io::to_json(*sys), Verdict::info, "relation system built",
                    {{"elements", sys->size()}}, sw.millis());
    } else if (op == "free" || op == "strongly-free" || op == "weakly-free") {
      const auto b = sys->all();
      const Truth t = op == "free"            ? relsys::is_free(*sys, b, cfg.cap.search).truth
                      : op == "strongly-free" ? relsys::is_strongly_free(*sys, b, cfg.cap.search).truth
                                              : relsys::is_weakly_free(*sys, b, cfg.cap.search).truth;
      const json ev = {{"truth", to_string(t)}};
      rep.add_stage(op, io::to_json(*sys), ev, verdict_of(t), std::string(to_string(t)), ev, sw.millis());
    } else if (op == "lambda-free") {
      const auto r = relsys::check_lambda_free(*sys, count("lambda", 0), cfg.cap.search);
      json ev = {{"subsets_checked", r.subsets_checked}};
      if (r.minimal_failure) ev["minimal_failure"] = *r.minimal_failure;
      rep.add_stage(op, io::to_json(*sys), ev, verdict_of(r.truth), std::string(to_string(r.truth)), ev, sw.millis());
    } else if (op == "saturate") {
      construct::BuildParams bp;
      bp.depth = count("depth", 1);
      bp.witness_cap = count("witness_cap", bp.witness_cap);
      bp.u_cap = count("u_cap", bp.u_cap);
      bp.max_points = count("max_points", bp.max_points);
      auto r = construct::saturate(*sys, bp);
      m = std::move(r.structure);
      const json ev = {{"points", m->size()}, {"achieved_depth", r.achieved_depth}};
      rep.add_stage(op, io::to_json(*sys), io::to_json(*m, *sys), Verdict::info,
                    std::to_string(m->size()) + " points", ev, sw.millis());
    } else if (op == "graph") {
      g = construct::graph_of(*m);
      rep.add_stage(op, io::to_json(*m, *sys), io::to_json(*g), Verdict::info,
                    std::to_string(g->size()) + " nodes, " + std::to_string(g->edge_count()) + " edges",
                    {{"nodes", g->size()}, {"edges", g->edge_count()}}, sw.millis());
    } else if (op == "chrom") {
      const auto r = graph::chromatic_number(*g, cfg.budget);
      const json ev = {{"exact", r.exact}, {"lower", r.lower}, {"upper", r.upper}};
      rep.add_stage(op, io::to_json(*g), ev, r.exact ? Verdict::pass : Verdict::undecided,
                    "chromatic number " + std::to_string(r.upper), ev, sw.millis());
    } else if (op == "colnum") {
      const auto cl = graph::colouring_number(*g);
      const json ev = {{"colouring_number", cl}};
      rep.add_stage(op, io::to_json(*g), ev, Verdict::pass, "colouring number " + std::to_string(cl), ev, sw.millis());
    } else if (op == "cegar") {
      construct::CegarParams cp;
      cp.kappa = count("kappa", 0);
      cp.max_depth = count("max_depth", cp.max_depth);
      cp.initial_depth = count("initial_depth", cp.initial_depth);
      cp.solver_budget = cfg.budget;
      auto r = construct::cegar_chromatic(*sys, cp);
      const json ev = cegar_summary(r);
      rep.add_stage(op, io::to_json(*sys), ev, cegar_verdict_name(r.outcome),
                    std::string(to_string(r.outcome)) + ": " + r.reason, ev, sw.millis());
      m = std::move(r.structure);
    } else if (op == "inc-bracket") {
      const auto v = incompact::check_inc_bracket(*g, count("lambda", 0), count("chi", 0), cfg.budget,
                                                  incompact::kBracketScanCap, cfg.seed);
      const json ev = {{"grade", to_string(v.grade)}, {"subsets_checked", v.subsets_checked}, {"reason", v.reason}};
      rep.add_stage(op, io::to_json(*g), ev, verdict_of(v.truth), v.reason, ev, sw.millis());
    }
  }
  return rep;
}

}  // namespace incwb::cli
