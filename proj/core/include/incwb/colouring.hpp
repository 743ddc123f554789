#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "incwb/common.hpp"
#include "incwb/graph.hpp"

namespace incwb::graph {

/// Default search-node budget for the exact colouring solver.
inline constexpr std::uint64_t kDefaultSolverBudget = 5'000'000;

/// True iff no edge is monochromatic. Throws InputError when the colouring
/// does not cover exactly the graph's nodes.
bool is_proper(const Graph& g, const Colouring& c);

/// Result of the exact chromatic-number search. When the budget runs out
/// the answer is the interval [lower, upper]; `exact` is never set on a
/// guess.
struct ChromaticResult {
  bool exact = false;
  std::size_t lower = 0;
  std::size_t upper = 0;
  /// A proper colouring with `upper` colours.
  Colouring best;
  std::uint64_t steps = 0;

  /// The chromatic number; only meaningful when `exact`.
  std::size_t value() const { return upper; }
};

/// Exact chromatic number by DSATUR branch-and-bound with a greedy clique
/// lower bound. Deterministic. 0 for the empty graph.
ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget = kDefaultSolverBudget);

/// Decision version: a proper colouring with at most k colours, a proof
/// that none exists, or undecided when the budget runs out.
struct KColouringResult {
  Truth status = Truth::undecided;
  std::optional<Colouring> colouring;
  std::uint64_t steps = 0;
};
KColouringResult find_colouring(const Graph& g, std::size_t k, std::uint64_t budget = kDefaultSolverBudget);

/// Size of a clique found greedily; a lower bound on the chromatic number.
std::size_t greedy_clique_size(const Graph& g);

/// Colouring number: degeneracy + 1, via repeated deletion of a
/// minimum-degree node (least index on ties). 0 for the empty graph.
std::size_t colouring_number(const Graph& g);

/// Reverse of the minimum-degree deletion sequence. Every node has fewer
/// than colouring_number(g) earlier neighbours in this order.
NodeOrder degeneracy_order(const Graph& g);

/// Largest number of earlier neighbours of any node under `ord`.
std::size_t max_back_degree(const Graph& g, const NodeOrder& ord);

/// First-fit along `ord`: each node takes the least colour not used by an
/// earlier neighbour.
Colouring greedy_colour(const Graph& g, const NodeOrder& ord);

}  // namespace incwb::graph
