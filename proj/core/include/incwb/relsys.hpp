#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "incwb/common.hpp"

namespace incwb::relsys {

using ElementId = std::size_t;
/// Sorted, duplicate-free set of element indices.
using Subset = std::vector<ElementId>;
/// Ordered pair (nu, eta), read "nu R eta".
using Pair = std::pair<ElementId, ElementId>;
/// The colour map h of a witness, defined exactly on its subset.
using ColourMap = std::map<ElementId, std::size_t>;

/// A ground set with kappa binary relations R_0, ..., R_{kappa-1}.
/// Relations are irreflexive; this is enforced at construction.
class RelationSystem {
 public:
  RelationSystem() = default;
  /// `relations` may list fewer than kappa relations; missing ones are empty.
  RelationSystem(std::vector<std::string> ground, std::size_t kappa, std::vector<std::vector<Pair>> relations);
  static RelationSystem from_names(std::vector<std::string> ground, std::size_t kappa,
                                   const std::vector<std::vector<std::pair<std::string, std::string>>>& relations);

  std::size_t size() const { return ground_.size(); }
  std::size_t kappa() const { return kappa_; }
  const std::string& name(ElementId e) const { return ground_.at(e); }
  const std::vector<std::string>& names() const { return ground_; }
  std::optional<ElementId> find(std::string_view name) const;
  ElementId index_of(std::string_view name) const;

  /// Sorted pair list of R_zeta.
  const std::vector<Pair>& relation(std::size_t zeta) const { return relations_.at(zeta); }
  bool related(ElementId nu, std::size_t zeta, ElementId eta) const { return labels(nu, eta).contains(zeta); }
  /// {zeta : nu R_zeta eta}.
  IndexSet labels(ElementId nu, ElementId eta) const { return labels_.at(nu * ground_.size() + eta); }
  /// The whole ground set as a subset.
  Subset all() const;
  Subset subset_of(const std::vector<std::string>& names) const;

  friend bool operator==(const RelationSystem& a, const RelationSystem& b) {
    return a.ground_ == b.ground_ && a.kappa_ == b.kappa_ && a.relations_ == b.relations_;
  }

 private:
  std::vector<std::string> ground_;
  std::unordered_map<std::string, ElementId> index_;
  std::size_t kappa_ = 1;
  std::vector<std::vector<Pair>> relations_;
  std::vector<IndexSet> labels_;
};

/// (h, <_*): a colour map plus an ordering of its domain.
struct FreenessWitness {
  ColourMap colour;
  std::vector<ElementId> order;

  friend bool operator==(const FreenessWitness&, const FreenessWitness&) = default;
};

struct WitnessOptions {
  /// Number of admissible colours for h; 0 means kappa.
  std::size_t colour_space = 0;
  /// When false, the ordering clause is dropped and only the exception
  /// bound is checked (relative to the witness order). This relaxed variant
  /// is exposed for experiments; no equivalence with the literal one is claimed.
  bool enforce_order_clause = true;
};

enum class Clause { colour_range, order, exceptions };
std::string_view to_string(Clause c);

struct Violation {
  Clause clause = Clause::exceptions;
  ElementId element = 0;
  std::optional<ElementId> other;
  std::optional<std::size_t> relation;
  std::string message;
};

struct WitnessVerdict {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// {zeta : some nu in B before eta in w.order has nu R_zeta eta and h(nu) = h(eta)}.
/// Throws InputError if eta is not in B or w is not defined exactly on B.
IndexSet exp_set(const RelationSystem& sys, const Subset& b, ElementId eta, const FreenessWitness& w);

/// Order-free variant: {zeta : some nu in B has nu R_zeta eta and h(nu) = h(eta)}.
IndexSet weak_exp_set(const RelationSystem& sys, const Subset& b, ElementId eta, const ColourMap& h);

/// Checks the colour range, the ordering clause (same colour and related
/// implies earlier) and the exception bound |exp| < kappa.
WitnessVerdict verify_witness(const RelationSystem& sys, const Subset& b, const FreenessWitness& w,
                              const WitnessOptions& opts = {});

/// Limits on exhaustive search; exceeding one yields Truth::undecided.
struct SearchCaps {
  std::size_t max_elements = 8;
  /// Bound on the colour space searched (kappa, or the witness colour space).
  std::size_t max_colours = 4;
  /// Strong freeness enumerates every ordering.
  std::size_t max_strong_elements = 7;
  /// Bound on subsets scanned by the lambda-freeness check.
  std::uint64_t max_subsets = std::uint64_t{1} << 16;
};

struct FreenessResult {
  Truth truth = Truth::undecided;
  /// The lexicographically least witness under (order, h).
  std::optional<FreenessWitness> witness;
  std::string note;
};
FreenessResult is_free(const RelationSystem& sys, const Subset& b, const SearchCaps& caps = {},
                       const WitnessOptions& opts = {});

struct StrongFreenessResult {
  Truth truth = Truth::undecided;
  /// One witness per ordering (orderings in lexicographic order) when yes.
  std::vector<FreenessWitness> certificate;
  /// An ordering admitting no colour map when no.
  std::optional<std::vector<ElementId>> failing_order;
  std::string note;
};
StrongFreenessResult is_strongly_free(const RelationSystem& sys, const Subset& b, const SearchCaps& caps = {},
                                      const WitnessOptions& opts = {});

struct WeakFreenessResult {
  Truth truth = Truth::undecided;
  std::optional<ColourMap> colouring;
  std::string note;
};
WeakFreenessResult is_weakly_free(const RelationSystem& sys, const Subset& b, const SearchCaps& caps = {},
                                  const WitnessOptions& opts = {});

struct LambdaFreeResult {
  Truth truth = Truth::undecided;
  /// A non-free subset of least size (hence inclusion-minimal) on failure.
  std::optional<Subset> minimal_failure;
  std::uint64_t subsets_checked = 0;
  std::string note;
};
/// Every subset of size < lambda is free.
LambdaFreeResult check_lambda_free(const RelationSystem& sys, std::size_t lambda, const SearchCaps& caps = {},
                                   const WitnessOptions& opts = {});

/// A system with an increasing chain of subsets whose union is the ground set.
struct IncSystemWitness {
  RelationSystem system;
  std::vector<Subset> chain;
};

struct IncVerdict {
  Truth truth = Truth::undecided;
  std::string reason;
  /// Chain index whose freeness failed or was undecided.
  std::optional<std::size_t> failing_index;
};
/// Every chain member free and the ground set not free. Throws InputError
/// when the chain is not increasing or does not exhaust the ground set.
IncVerdict verify_inc_witness(const IncSystemWitness& w, const SearchCaps& caps = {}, const WitnessOptions& opts = {});

}  // namespace incwb::relsys
