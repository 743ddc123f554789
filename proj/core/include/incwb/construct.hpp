#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "incwb/colouring.hpp"
#include "incwb/graph.hpp"
#include "incwb/relsys.hpp"

namespace incwb::construct {

using relsys::ElementId;
using PointId = std::size_t;
/// Successor functions at one point: entry zeta is F_zeta(a), if defined.
using SuccMap = std::vector<std::optional<PointId>>;

/// A structure whose points are labelled by ground elements and carry
/// partial successor functions F_0, ..., F_{kappa-1}. Points are numbered in
/// creation order.
class KaStructure {
 public:
  KaStructure() = default;
  explicit KaStructure(std::size_t kappa) : kappa_(kappa) {}

  std::size_t kappa() const { return kappa_; }
  std::size_t size() const { return labels_.size(); }

  /// Appends a point. `succ` must have kappa entries naming existing points.
  PointId add_point(ElementId label, std::size_t level, SuccMap succ);

  ElementId label(PointId a) const { return labels_.at(a); }
  std::size_t level(PointId a) const { return levels_.at(a); }
  const SuccMap& succ(PointId a) const { return succ_.at(a); }
  std::optional<PointId> succ(PointId a, std::size_t zeta) const { return succ_.at(a).at(zeta); }
  /// Points labelled `eta`, in creation order.
  std::vector<PointId> points_labelled(ElementId eta) const;
  std::size_t max_level() const;
  std::size_t succ_count() const;

  /// A point labelled `eta` whose successor map is exactly `succ`.
  std::optional<PointId> find_realizer(ElementId eta, const SuccMap& succ) const;

  /// Graph node name of point a.
  static std::string point_name(PointId a) { return "p" + std::to_string(a); }

  friend bool operator==(const KaStructure& a, const KaStructure& b) {
    return a.kappa_ == b.kappa_ && a.labels_ == b.labels_ && a.levels_ == b.levels_ && a.succ_ == b.succ_;
  }

 private:
  std::size_t kappa_ = 1;
  std::vector<ElementId> labels_;
  std::vector<std::size_t> levels_;
  std::vector<SuccMap> succ_;
  std::map<ElementId, std::vector<PointId>> by_label_;
  std::map<std::pair<ElementId, SuccMap>, PointId> realizers_;
};

enum class StructureFault { label_out_of_range, relation, level };
std::string_view to_string(StructureFault f);

struct StructureViolation {
  StructureFault fault = StructureFault::relation;
  PointId point = 0;
  std::optional<std::size_t> zeta;
  std::string message;
};

struct StructureVerdict {
  std::vector<StructureViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Labels lie in the ground set, every F_zeta(a2) = a1 has
/// label(a1) R_zeta label(a2), and successors sit at strictly lower levels.
StructureVerdict validate_K_a(const KaStructure& m, const relsys::RelationSystem& sys);

struct BuildParams {
  std::size_t depth = 1;
  /// Max new points per (eta, u) at each level.
  std::size_t witness_cap = 64;
  /// Max |u| instantiated; 0 means kappa.
  std::size_t u_cap = 0;
  /// Stop before the universe exceeds this many points.
  std::size_t max_points = 20000;
};

struct SaturationResult {
  KaStructure structure;
  std::size_t achieved_depth = 0;
  bool witness_cap_hit = false;
  bool point_guard_hit = false;
};

/// Level 0 holds one point per element. Level d+1 adds, for each element
/// eta, each u within u_cap and each choice of related nu_zeta and points
/// a_zeta of level <= d, a point labelled eta with F_zeta = a_zeta exactly
/// on u, unless such a point already exists. Enumeration is deterministic.
SaturationResult saturate(const relsys::RelationSystem& sys, const BuildParams& params);

/// G_M: nodes are the points (named "p<id>"), edges {a, F_zeta(a)}.
graph::Graph graph_of(const KaStructure& m);

/// G_{M,B}: the subgraph of G_M induced on points labelled in b, plus the
/// map from its node indices back to points.
struct PartGraph {
  graph::Graph graph;
  std::vector<PointId> points;
};
PartGraph part_graph(const KaStructure& m, const relsys::Subset& b);

struct WitnessColouring {
  PartGraph part;
  graph::Colouring colouring;
  /// (h(label(a)), c) per node; colouring.colour = first * kappa + second.
  std::vector<std::pair<std::size_t, std::size_t>> pair_colour;
  /// Largest number of already-coloured neighbours met when colouring a point.
  std::size_t max_exclusion = 0;
};

/// Colours G_{M,B} from a verified freeness witness: within colour class
/// eps of h, scan elements in witness order and give each point the least
/// index unused among its already coloured neighbours in the class.
/// Throws InputError if the witness does not verify.
WitnessColouring colour_from_witness(const KaStructure& m, const relsys::RelationSystem& sys, const relsys::Subset& b,
                                     const relsys::FreenessWitness& w);

/// Colouring number of G_{M, B_eps} for each colour class eps < kappa.
std::vector<std::size_t> class_colouring_numbers(const KaStructure& m, const relsys::RelationSystem& sys,
                                                 const relsys::Subset& b, const relsys::FreenessWitness& w);

/// A point that would complete the saturation of M for one tuple.
struct SaturationRequest {
  ElementId label = 0;
  SuccMap succ;
  std::size_t level = 0;
};

/// Case 1 data at one element eta: every colour in H_eta sees all kappa
/// relation indices.
struct CaseOne {
  ElementId eta = 0;
  /// Injective g: H_eta -> kappa.
  std::map<std::size_t, std::size_t> g;
  /// eps -> nu_eps in Lambda_{eta, eps, g(eps)}.
  std::map<std::size_t, ElementId> witness_element;
  /// eps -> a_eps in P_{nu_eps} with colour eps.
  std::map<std::size_t, PointId> witness_point;
  SaturationRequest request;
  /// Set only when the request is already realized, which a proper
  /// colouring rules out: the realizer shares a colour with some a_eps.
  std::optional<PointId> realizer;
  std::optional<graph::Edge> monochromatic_edge;
};

struct CaseTwo {
  /// h(eta) in H_eta minimizing |Z_{eta, eps}| (least eps on ties).
  relsys::ColourMap h;
  /// Z_{eta, h(eta)}.
  std::map<ElementId, IndexSet> z;
  /// exp(eta, h, ord) is contained in Z_{eta, h(eta)} for every eta.
  bool exp_within_z = false;
  /// |exp(eta, h, ord)| < kappa for every eta.
  bool exceptions_bounded = false;
  /// The ordering clause checked separately on (h, ord).
  relsys::WitnessVerdict order_clause;
};

struct ExtractionResult {
  /// H_nu per element.
  std::vector<IndexSet> colours_seen;
  /// Case 1 holds at these elements (in ord order), or Case 2.
  std::variant<std::vector<CaseOne>, CaseTwo> outcome;
  std::vector<std::string> notices;

  bool is_case_one() const { return outcome.index() == 0; }
  const std::vector<CaseOne>& case_one() const { return std::get<0>(outcome); }
  const CaseTwo& case_two() const { return std::get<1>(outcome); }
};

struct ExtractOptions {
  bool require_proper = true;
};

/// Runs the colouring dichotomy on a colouring of G_M into kappa colours
/// with respect to the element order `ord`. Throws InputError for colours
/// >= kappa, for improper colourings (unless disabled), or for an `ord`
/// that is not an ordering of the ground set.
ExtractionResult extract_from_colouring(const KaStructure& m, const relsys::RelationSystem& sys,
                                        const graph::Colouring& c, const std::vector<ElementId>& ord,
                                        const ExtractOptions& opts = {});

struct CegarParams {
  /// Colour bound; 0 means sys.kappa(). Must not exceed sys.kappa().
  std::size_t kappa = 0;
  std::size_t initial_depth = 0;
  std::size_t max_depth = 3;
  std::size_t max_rounds = 500;
  std::uint64_t solver_budget = graph::kDefaultSolverBudget;
  BuildParams build{};
};

enum class CegarOutcome { exceeds_kappa, colourable, undecided };
std::string_view to_string(CegarOutcome o);

struct CegarRound {
  std::size_t round = 0;
  std::size_t points = 0;
  std::size_t edges = 0;
  Truth colourable = Truth::undecided;
  std::uint64_t solver_steps = 0;
  /// "case1", "case2" or empty when no colouring was found.
  std::string extraction;
  std::vector<SaturationRequest> added;
  std::size_t blocked_by_depth = 0;
};

struct CegarReport {
  CegarOutcome outcome = CegarOutcome::undecided;
  std::string reason;
  std::size_t kappa = 0;
  std::vector<CegarRound> rounds;
  KaStructure structure;
  std::size_t depth_reached = 0;
  std::optional<graph::Colouring> last_colouring;
  std::optional<CaseTwo> case_two;
};

/// Colour, extract and extend: asks the exact solver for a kappa-colouring of
/// G_M; if Case 1 holds, adds the missing saturation points (within
/// max_depth) and repeats. Uses the ground order for extraction.
CegarReport cegar_chromatic(const relsys::RelationSystem& sys, const CegarParams& params);

}  // namespace incwb::construct
