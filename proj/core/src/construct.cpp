#include "incwb/construct.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "incwb/matching.hpp"

namespace incwb::construct {

using graph::Colouring;
using graph::Graph;
using relsys::RelationSystem;
using relsys::Subset;

PointId KaStructure::add_point(ElementId label, std::size_t level, SuccMap succ) {
  if (succ.size() != kappa_) throw InputError("successor map must have kappa entries");
  for (const auto& s : succ) {
    if (s && *s >= labels_.size()) throw InputError("successor refers to a point that does not exist yet");
  }
  const PointId id = labels_.size();
  labels_.push_back(label);
  levels_.push_back(level);
  by_label_[label].push_back(id);
  realizers_.emplace(std::make_pair(label, succ), id);
  succ_.push_back(std::move(succ));
  return id;
}

std::vector<PointId> KaStructure::points_labelled(ElementId eta) const {
  auto it = by_label_.find(eta);
  return it == by_label_.end() ? std::vector<PointId>{} : it->second;
}

std::size_t KaStructure::max_level() const {
  return levels_.empty() ? 0 : *std::max_element(levels_.begin(), levels_.end());
}

std::size_t KaStructure::succ_count() const {
  std::size_t n = 0;
  for (const auto& s : succ_) n += static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](const auto& x) {
    return x.has_value();
  }));
  return n;
}

std::optional<PointId> KaStructure::find_realizer(ElementId eta, const SuccMap& succ) const {
  auto it = realizers_.find(std::make_pair(eta, succ));
  if (it == realizers_.end()) return std::nullopt;
  return it->second;
}

std::string_view to_string(StructureFault f) {
  switch (f) {
    case StructureFault::label_out_of_range:
      return "label-out-of-range";
    case StructureFault::relation:
      return "relation";
    case StructureFault::level:
      return "level";
  }
  return "relation";
}

StructureVerdict validate_K_a(const KaStructure& m, const RelationSystem& sys) {
  StructureVerdict v;
  if (m.kappa() != sys.kappa()) throw InputError("structure and system disagree on kappa");
  for (PointId a = 0; a < m.size(); ++a) {
    if (m.label(a) >= sys.size()) {
      v.violations.push_back({StructureFault::label_out_of_range, a, std::nullopt,
                              "point " + std::to_string(a) + " has a label outside the ground set"});
    }
  }
  if (!v.valid()) return v;
  for (PointId a2 = 0; a2 < m.size(); ++a2) {
    for (std::size_t zeta = 0; zeta < m.kappa(); ++zeta) {
      const auto a1 = m.succ(a2, zeta);
      if (!a1) continue;
      if (!sys.related(m.label(*a1), zeta, m.label(a2))) {
        v.violations.push_back({StructureFault::relation, a2, zeta,
                                "F_" + std::to_string(zeta) + "(p" + std::to_string(a2) + ") = p" + std::to_string(*a1) +
                                    " but not " + sys.name(m.label(*a1)) + " R_" + std::to_string(zeta) + " " +
                                    sys.name(m.label(a2))});
      }
      if (m.level(*a1) >= m.level(a2)) {
        v.violations.push_back({StructureFault::level, a2, zeta,
                                "F_" + std::to_string(zeta) + "(p" + std::to_string(a2) +
                                    ") does not lie at a lower level"});
      }
    }
  }
  return v;
}

SaturationResult saturate(const RelationSystem& sys, const BuildParams& params) {
  const std::size_t kappa = sys.kappa();
  const std::size_t u_cap = params.u_cap == 0 ? kappa : std::min(params.u_cap, kappa);
  SaturationResult result{KaStructure(kappa), 0, false, false};
  auto& m = result.structure;
  for (ElementId eta = 0; eta < sys.size(); ++eta) m.add_point(eta, 0, SuccMap(kappa));

  for (std::size_t d = 0; d < params.depth; ++d) {
    const std::size_t existing = m.size();
    for (ElementId eta = 0; eta < sys.size(); ++eta) {
      // options[zeta]: points a with label(a) R_zeta eta and level <= d.
      std::vector<std::vector<PointId>> options(kappa);
      for (std::size_t zeta = 0; zeta < kappa; ++zeta) {
        for (PointId a = 0; a < existing; ++a) {
          if (m.level(a) <= d && sys.related(m.label(a), zeta, eta)) options[zeta].push_back(a);
        }
        std::stable_sort(options[zeta].begin(), options[zeta].end(),
                         [&](PointId x, PointId y) { return m.label(x) < m.label(y); });
      }
      for (std::size_t k = 1; k <= u_cap; ++k) {
        const bool completed = for_each_k_subset(kappa, k, [&](const std::vector<std::size_t>& u) {
          if (std::any_of(u.begin(), u.end(), [&](std::size_t z) { return options[z].empty(); })) return true;
          std::vector<std::size_t> pick(k, 0);
          std::size_t added = 0;
          while (true) {
            SuccMap succ(kappa);
            for (std::size_t i = 0; i < k; ++i) succ[u[i]] = options[u[i]][pick[i]];
            if (!m.find_realizer(eta, succ)) {
              if (m.size() >= params.max_points) {
                result.point_guard_hit = true;
                return false;
              }
              m.add_point(eta, d + 1, std::move(succ));
              if (++added >= params.witness_cap) {
                result.witness_cap_hit = true;
                return true;
              }
            }
            std::size_t i = k;
            while (i > 0 && ++pick[i - 1] == options[u[i - 1]].size()) pick[--i] = 0;
            if (i == 0) return true;
          }
        });
        if (!completed) return result;
      }
    }
    result.achieved_depth = d + 1;
  }
  return result;
}

Graph graph_of(const KaStructure& m) {
  std::vector<std::string> names;
  names.reserve(m.size());
  for (PointId a = 0; a < m.size(); ++a) names.push_back(KaStructure::point_name(a));
  std::vector<std::pair<graph::NodeId, graph::NodeId>> edges;
  for (PointId a = 0; a < m.size(); ++a)
    for (const auto& s : m.succ(a))
      if (s) edges.emplace_back(a, *s);
  return Graph::from_indexed(std::move(names), edges);
}

PartGraph part_graph(const KaStructure& m, const Subset& b_in) {
  const auto b = normalize_subset(b_in, std::numeric_limits<std::size_t>::max(), "subset");
  PartGraph out;
  std::vector<std::size_t> local(m.size(), m.size());
  std::vector<std::string> names;
  for (PointId a = 0; a < m.size(); ++a) {
    if (std::binary_search(b.begin(), b.end(), m.label(a))) {
      local[a] = out.points.size();
      out.points.push_back(a);
      names.push_back(KaStructure::point_name(a));
    }
  }
  std::vector<std::pair<graph::NodeId, graph::NodeId>> edges;
  for (PointId a : out.points)
    for (const auto& s : m.succ(a))
      if (s && local[*s] < m.size()) edges.emplace_back(local[a], local[*s]);
  out.graph = Graph::from_indexed(std::move(names), edges);
  return out;
}

WitnessColouring colour_from_witness(const KaStructure& m, const RelationSystem& sys, const Subset& b,
                                     const relsys::FreenessWitness& w) {
  const auto verdict = relsys::verify_witness(sys, b, w);
  if (!verdict.valid()) throw InputError("freeness witness does not verify: " + verdict.violations.front().message);
  const std::size_t kappa = sys.kappa();
  WitnessColouring out;
  out.part = part_graph(m, b);
  const auto& g = out.part.graph;
  std::vector<std::size_t> local(m.size(), m.size());
  for (std::size_t i = 0; i < out.part.points.size(); ++i) local[out.part.points[i]] = i;

  std::vector<bool> done(g.size(), false);
  out.pair_colour.assign(g.size(), {0, 0});
  for (ElementId eta : w.order) {
    const std::size_t eps = w.colour.at(eta);
    for (PointId a : m.points_labelled(eta)) {
      const std::size_t v = local[a];
      std::vector<bool> taken(kappa + 1, false);
      std::size_t exclusion = 0;
      for (auto nb : g.neighbours(v)) {
        if (!done[nb] || out.pair_colour[nb].first != eps) continue;
        ++exclusion;
        const auto c = out.pair_colour[nb].second;
        if (c < taken.size()) taken[c] = true;
      }
      out.max_exclusion = std::max(out.max_exclusion, exclusion);
      std::size_t c = 0;
      while (c < taken.size() && taken[c]) ++c;
      if (c >= kappa) throw std::logic_error("witness colouring ran out of the kappa second coordinates");
      out.pair_colour[v] = {eps, c};
    }
    // Mark after the whole class block: P_eta carries no internal edges.
    for (PointId a : m.points_labelled(eta)) done[local[a]] = true;
  }
  out.colouring.colour.resize(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) out.colouring.colour[v] = out.pair_colour[v].first * kappa + out.pair_colour[v].second;
  return out;
}

std::vector<std::size_t> class_colouring_numbers(const KaStructure& m, const RelationSystem& sys, const Subset& b,
                                                 const relsys::FreenessWitness& w) {
  const auto dom = normalize_subset(b, sys.size(), "subset");
  if (dom.size() != w.colour.size() ||
      !std::all_of(dom.begin(), dom.end(), [&](ElementId e) { return w.colour.count(e) > 0; })) {
    throw InputError("witness colour map is not defined exactly on the subset");
  }
  std::vector<std::size_t> out;
  for (std::size_t eps = 0; eps < sys.kappa(); ++eps) {
    Subset cls;
    for (const auto& [e, c] : w.colour)
      if (c == eps) cls.push_back(e);
    out.push_back(graph::colouring_number(part_graph(m, cls).graph));
  }
  return out;
}

ExtractionResult extract_from_colouring(const KaStructure& m, const RelationSystem& sys, const Colouring& c,
                                        const std::vector<ElementId>& ord, const ExtractOptions& opts) {
  const std::size_t n = sys.size();
  const std::size_t kappa = sys.kappa();
  if (!is_permutation_of_range(ord, n)) throw InputError("element order is not an ordering of the ground set");
  if (c.size() != m.size()) throw InputError("colouring does not cover the structure's points");
  for (auto col : c.colour) {
    if (col >= kappa) throw InputError("colour " + std::to_string(col) + " is not below kappa");
  }
  const Graph g = graph_of(m);
  if (opts.require_proper && !graph::is_proper(g, c)) throw InputError("colouring is not proper");

  ExtractionResult result;
  result.colours_seen.assign(n, IndexSet{});
  for (PointId a = 0; a < m.size(); ++a) {
    if (m.label(a) < n) result.colours_seen[m.label(a)].insert(c.colour[a]);
  }
  const auto& colours_seen = result.colours_seen;
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[ord[i]] = i;

  // lambda_nonempty[eta][eps] = Z_{eta, eps} = {zeta : Lambda_{eta, eps, zeta} != empty}.
  std::vector<std::vector<IndexSet>> z(n, std::vector<IndexSet>(kappa));
  for (ElementId eta = 0; eta < n; ++eta) {
    for (ElementId nu = 0; nu < n; ++nu) {
      if (pos[nu] >= pos[eta]) continue;
      const IndexSet lab = sys.labels(nu, eta);
      if (lab.empty()) continue;
      for (auto eps : colours_seen[nu].to_vector()) z[eta][eps] |= lab;
    }
  }

  const IndexSet everything = IndexSet::full(kappa);
  std::vector<CaseOne> case_one;
  std::vector<ElementId> active;
  for (ElementId eta : ord) {
    if (colours_seen[eta].empty()) {
      result.notices.push_back("no point is labelled " + sys.name(eta) + "; skipped");
      continue;
    }
    active.push_back(eta);
    const auto hs = colours_seen[eta].to_vector();
    if (!std::all_of(hs.begin(), hs.end(), [&](std::size_t eps) { return z[eta][eps] == everything; })) continue;

    CaseOne one;
    one.eta = eta;
    matching::BipartiteMatcher matcher(hs.size(), kappa);
    for (std::size_t i = 0; i < hs.size(); ++i)
      for (auto zeta : z[eta][hs[i]].to_vector()) matcher.add_edge(i, zeta);
    if (matcher.solve() != hs.size()) throw std::logic_error("no injective g although every Z is full");
    one.request.label = eta;
    one.request.succ.assign(kappa, std::nullopt);
    std::size_t top_level = 0;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const std::size_t eps = hs[i];
      const std::size_t zeta = *matcher.mate_of_left(i);
      one.g[eps] = zeta;
      std::optional<PointId> chosen;
      for (PointId a = 0; a < m.size(); ++a) {
        const ElementId nu = m.label(a);
        if (c.colour[a] != eps || pos[nu] >= pos[eta] || !sys.related(nu, zeta, eta)) continue;
        if (!chosen || m.level(a) < m.level(*chosen)) chosen = a;
      }
      one.witness_point[eps] = *chosen;
      one.witness_element[eps] = m.label(*chosen);
      one.request.succ[zeta] = *chosen;
      top_level = std::max(top_level, m.level(*chosen));
    }
    one.request.level = top_level + 1;
    one.realizer = m.find_realizer(eta, one.request.succ);
    if (one.realizer) {
      for (const auto& [eps, a] : one.witness_point) {
        if (c.colour[*one.realizer] == eps) {
          one.monochromatic_edge = graph::Edge{std::min(a, *one.realizer), std::max(a, *one.realizer)};
        }
      }
    }
    case_one.push_back(std::move(one));
  }
  if (!case_one.empty()) {
    result.outcome = std::move(case_one);
    return result;
  }

  CaseTwo two;
  for (ElementId eta : active) {
    std::optional<std::size_t> best;
    for (auto eps : colours_seen[eta].to_vector()) {
      if (!best || z[eta][eps].size() < z[eta][*best].size()) best = eps;
    }
    two.h[eta] = *best;
    two.z[eta] = z[eta][*best];
  }
  Subset domain = active;
  std::sort(domain.begin(), domain.end());
  const relsys::FreenessWitness w{two.h, active};
  two.exp_within_z = true;
  two.exceptions_bounded = true;
  for (ElementId eta : active) {
    const IndexSet ex = relsys::exp_set(sys, domain, eta, w);
    if (!ex.is_subset_of(two.z[eta])) two.exp_within_z = false;
    if (ex.size() >= kappa) two.exceptions_bounded = false;
  }
  auto full = relsys::verify_witness(sys, domain, w);
  for (auto& v : full.violations)
    if (v.clause == relsys::Clause::order) two.order_clause.violations.push_back(std::move(v));
  result.outcome = std::move(two);
  return result;
}

std::string_view to_string(CegarOutcome o) {
  switch (o) {
    case CegarOutcome::exceeds_kappa:
      return "exceeds-kappa";
    case CegarOutcome::colourable:
      return "colourable";
    case CegarOutcome::undecided:
      return "undecided";
  }
  return "undecided";
}

CegarReport cegar_chromatic(const RelationSystem& sys, const CegarParams& params) {
  const std::size_t kappa = params.kappa == 0 ? sys.kappa() : params.kappa;
  if (kappa > sys.kappa()) throw InputError("colour bound exceeds the number of relations");
  CegarReport report;
  report.kappa = kappa;
  BuildParams build = params.build;
  build.depth = params.initial_depth;
  report.structure = saturate(sys, build).structure;
  auto& m = report.structure;
  const auto ord = sys.all();

  for (std::size_t round = 1; round <= params.max_rounds; ++round) {
    const Graph g = graph_of(m);
    const auto solved = graph::find_colouring(g, kappa, params.solver_budget);
    CegarRound rec;
    rec.round = round;
    rec.points = m.size();
    rec.edges = g.edge_count();
    rec.colourable = solved.status;
    rec.solver_steps = solved.steps;
    report.depth_reached = m.max_level();
    if (solved.status == Truth::no) {
      report.rounds.push_back(std::move(rec));
      report.outcome = CegarOutcome::exceeds_kappa;
      report.reason = "G_M has no proper colouring with " + std::to_string(kappa) + " colours (" +
                      std::to_string(m.size()) + " points, depth " + std::to_string(m.max_level()) + ")";
      return report;
    }
    if (solved.status == Truth::undecided) {
      report.rounds.push_back(std::move(rec));
      report.reason = "colouring solver budget exhausted";
      return report;
    }
    report.last_colouring = solved.colouring;
    auto ex = extract_from_colouring(m, sys, *solved.colouring, ord);
    if (!ex.is_case_one()) {
      rec.extraction = "case2";
      report.rounds.push_back(std::move(rec));
      report.outcome = CegarOutcome::colourable;
      report.case_two = ex.case_two();
      report.reason = "found a " + std::to_string(kappa) + "-colouring whose extraction falls in Case 2";
      return report;
    }
    rec.extraction = "case1";
    for (const auto& one : ex.case_one()) {
      const auto& req = one.request;
      if (req.level > params.max_depth) {
        ++rec.blocked_by_depth;
        continue;
      }
      if (m.find_realizer(req.label, req.succ)) continue;
      m.add_point(req.label, req.level, req.succ);
      rec.added.push_back(req);
    }
    const bool stalled = rec.added.empty();
    report.rounds.push_back(std::move(rec));
    if (stalled) {
      report.reason = "every Case 1 request lies beyond depth " + std::to_string(params.max_depth);
      return report;
    }
  }
  report.depth_reached = m.max_level();
  report.reason = "round limit reached";
  return report;
}

}  // namespace incwb::construct
