#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "incwb/colouring.hpp"
#include "incwb/graph.hpp"

namespace incwb::incompact {

using graph::Graph;

/// <G_i : i <= L> with thresholds: ch(G_L) >= chi1 and ch(G_i) < chi0 for i < L.
struct IncChain {
  std::vector<Graph> graphs;
  /// Indices whose node set must equal the union of all earlier node sets.
  std::vector<std::size_t> limits;
  std::size_t chi0 = 0;
  std::size_t chi1 = 0;
};

/// chi = kappa + 1 stands for "chi = kappa^+".
inline std::size_t chi_of_kappa(std::size_t kappa) { return kappa + 1; }

struct IndexEvidence {
  std::size_t index = 0;
  std::size_t nodes = 0;
  graph::ChromaticResult chromatic;
  Truth passes = Truth::undecided;
};

struct ChainVerdict {
  Truth truth = Truth::undecided;
  std::string reason;
  /// First index that failed (or, for undecided, could not be settled).
  std::optional<std::size_t> index;
  std::vector<std::string> structural_faults;
  std::vector<IndexEvidence> evidence;
};

/// Checks the chain shape (increasing node sets, each G_i induced in G_L,
/// declared limits are unions) and the two chromatic thresholds.
ChainVerdict check_inc_chain(const IncChain& c, std::uint64_t budget = graph::kDefaultSolverBudget);

enum class Grade { exhaustive, sampled };
std::string_view to_string(Grade g);

/// Subset scans beyond this many subsets switch to seeded sampling.
inline constexpr std::uint64_t kBracketScanCap = std::uint64_t{1} << 15;

struct BracketVerdict {
  Truth truth = Truth::undecided;
  Grade grade = Grade::exhaustive;
  std::string reason;
  graph::ChromaticResult whole;
  std::uint64_t subsets_checked = 0;
  /// A node set of size < lambda whose induced subgraph needs >= chi colours.
  std::optional<std::vector<graph::NodeId>> small_witness;
};

/// ch(g) >= chi and every induced subgraph on fewer than lambda nodes has
/// ch < chi. Only subsets of size min(lambda - 1, |g|) are scanned, since
/// chromatic number is monotone under induced subgraphs.
BracketVerdict check_inc_bracket(const Graph& g, std::size_t lambda, std::size_t chi,
                                 std::uint64_t budget = graph::kDefaultSolverBudget,
                                 std::uint64_t scan_cap = kBracketScanCap, std::uint64_t seed = 0);

/// Partition <A_eps : eps < eps*> of a graph's nodes, by node name.
struct PartitionCertificate {
  std::vector<std::vector<std::string>> parts;
  /// Optional claimed colouring-number bound per part.
  std::vector<std::size_t> bound;
};

struct PlusVerdict {
  Truth truth = Truth::undecided;
  std::string reason;
  std::vector<std::size_t> colouring_numbers;
  std::optional<std::size_t> failing_part;
  /// Chain form: index of the failing graph.
  std::optional<std::size_t> failing_index;
};

/// eps* < chi and each part induces a subgraph of colouring number < chi
/// (and within its claimed bound, when given). Throws InputError when the
/// parts overlap, miss a node or name an unknown node.
PlusVerdict check_inc_plus(const Graph& g, const PartitionCertificate& cert, std::size_t chi);

/// Chain form: one certificate per index i < L, each checked against G_i.
PlusVerdict check_inc_plus(const IncChain& c, const std::vector<PartitionCertificate>& certs, std::size_t chi);

}  // namespace incwb::incompact
