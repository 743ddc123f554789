#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "incwb/famfun.hpp"
#include "incwb/graph.hpp"
#include "incwb/relsys.hpp"

namespace incwb::reductions {

using famfun::FunctionFamily;
using famfun::MemberId;
using relsys::RelationSystem;

/// Injective coding of kappa x kappa into colour indices; codomain kappa^2.
class PairingScheme {
 public:
  explicit PairingScheme(std::size_t kappa);
  std::size_t kappa() const { return kappa_; }
  /// Size of the codomain.
  std::size_t colours() const { return kappa_ * kappa_; }
  std::size_t pair(std::size_t zeta, std::size_t eps) const;
  std::pair<std::size_t, std::size_t> unpair(std::size_t colour) const;

 private:
  std::size_t kappa_;
};

/// Ground set = members (named "f<i>"); f R_eps g iff f precedes g in
/// `base` and f(eps) = g(eps). Throws InputError unless `base` orders all
/// members.
RelationSystem family_to_system(const FunctionFamily& fam, const std::vector<MemberId>& base);

/// h(f) = pair(piece of f, least eps with f(eps) equal to its chosen value);
/// order = base restricted to the covered members. Throws InputError for an
/// invalid decomposition or more than kappa pieces.
relsys::FreenessWitness decomposition_to_witness(const FunctionFamily& fam, const famfun::FreeDecomposition& decomp,
                                                 const std::vector<MemberId>& base, const PairingScheme& scheme);

struct TransversalPartition {
  /// (eps, zeta) -> members f with h(f) = eps and zeta_f = zeta. Nonempty pieces only.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<MemberId>> pieces;
  /// Canonical choice f -> f(zeta) on each piece, keyed like `pieces`.
  std::map<std::pair<std::size_t, std::size_t>, famfun::Transversal> choices;
  /// zeta_f per member.
  std::map<MemberId, std::size_t> coordinate;
};

/// u_f = {zeta : g R_zeta f for some g with h(g) = h(f)}; zeta_f is the
/// least index outside u_f. Throws InputError if the witness does not verify
/// with colour space `colour_space` (0 means kappa) or some u_f is everything.
TransversalPartition witness_to_partition(const FunctionFamily& fam, const relsys::FreenessWitness& w,
                                          const std::vector<MemberId>& base, std::size_t colour_space = 0);

/// Ground = nodes; every R_eps = {(nu, eta) : edge, nu before eta in ord}.
RelationSystem graph_to_system(const graph::Graph& g, const graph::NodeOrder& ord, std::size_t kappa);

struct ExpSample {
  relsys::Subset b;
  relsys::FreenessWitness w;
};

struct DichotomyResult {
  bool holds = true;
  std::uint64_t exp_sets_checked = 0;
  /// First offending (sample index, element) when it fails.
  std::optional<std::pair<std::size_t, relsys::ElementId>> counterexample;
};

/// Every exp set of every sample is empty or all of kappa. Throws
/// InputError unless all relations of `sys` coincide.
DichotomyResult exp_dichotomy_check(const RelationSystem& sys, const std::vector<ExpSample>& samples);

/// Random subsets, colour maps into kappa and orders.
std::vector<ExpSample> random_exp_samples(const RelationSystem& sys, std::size_t count, std::uint64_t seed);

}  // namespace incwb::reductions
