#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "incwb/common.hpp"

namespace incwb::famfun {

using MemberId = std::size_t;
using Value = std::size_t;
/// A total function kappa -> mu, as its tuple of values.
using Tuple = std::vector<Value>;

/// A finite family of functions kappa -> mu. Members are kept in the given
/// order and may repeat unless the family is declared normal.
class FunctionFamily {
 public:
  FunctionFamily() = default;
  /// Throws InputError on wrong tuple lengths or values >= mu. A normal
  /// family additionally requires that a value determines its coordinate
  /// and that distinct members have distinct ranges.
  FunctionFamily(std::size_t kappa, std::size_t mu, std::vector<Tuple> members, bool normal = false);

  std::size_t kappa() const { return kappa_; }
  std::size_t mu() const { return mu_; }
  bool normal() const { return normal_; }
  std::size_t size() const { return members_.size(); }
  const Tuple& member(MemberId f) const { return members_.at(f); }
  const std::vector<Tuple>& members() const { return members_; }
  /// Sorted set of values taken by member f.
  const std::vector<Value>& range(MemberId f) const { return ranges_.at(f); }
  /// Member name used in reductions and reports: "f<index>".
  static std::string member_name(MemberId f);
  std::vector<MemberId> all() const;

  friend bool operator==(const FunctionFamily& a, const FunctionFamily& b) {
    return a.kappa_ == b.kappa_ && a.mu_ == b.mu_ && a.members_ == b.members_ && a.normal_ == b.normal_;
  }

 private:
  std::size_t kappa_ = 0;
  std::size_t mu_ = 0;
  bool normal_ = false;
  std::vector<Tuple> members_;
  std::vector<std::vector<Value>> ranges_;
};

/// One-to-one choice function on the ranges of a subfamily.
struct Transversal {
  std::map<MemberId, Value> choice;
  friend bool operator==(const Transversal&, const Transversal&) = default;
};

/// True iff every chosen value lies in its member's range and the values
/// are pairwise distinct, with domain exactly `sub`.
bool is_valid_transversal(const FunctionFamily& fam, const std::vector<MemberId>& sub, const Transversal& t);

struct TransversalResult {
  std::optional<Transversal> transversal;
  /// When none exists: members whose ranges have a union smaller than
  /// their number.
  std::vector<MemberId> blocking;
};
TransversalResult find_transversal(const FunctionFamily& fam, const std::vector<MemberId>& sub);

/// Partition of a subfamily into kappa pieces, each with a transversal.
struct FreeDecomposition {
  std::vector<std::vector<MemberId>> pieces;
  std::vector<Transversal> transversals;
};
/// Pieces disjoint, covering `sub`, each transversal valid for its piece.
bool is_valid_decomposition(const FunctionFamily& fam, const std::vector<MemberId>& sub, const FreeDecomposition& d);

struct FreeFamilyResult {
  Truth truth = Truth::undecided;
  std::optional<FreeDecomposition> decomposition;
  std::string note;
};
/// Default cap on the size of a subfamily for exact decomposition search.
inline constexpr std::size_t kDefaultDecompositionCap = 16;
FreeFamilyResult is_free_family(const FunctionFamily& fam, const std::vector<MemberId>& sub, std::size_t pieces,
                                std::size_t cap = kDefaultDecompositionCap);

struct FamilyLambdaFreeResult {
  Truth truth = Truth::undecided;
  /// Least-size subfamily without a transversal.
  std::optional<std::vector<MemberId>> minimal_failure;
  std::uint64_t subsets_checked = 0;
  std::string note;
};
/// Every subfamily of size < lambda has a transversal.
FamilyLambdaFreeResult check_family_lambda_free(const FunctionFamily& fam, std::size_t lambda,
                                                std::uint64_t max_subsets = std::uint64_t{1} << 20);

/// Checks an increasing chain of subfamilies whose members are each free
/// with `pieces` pieces. Finite chains only; no limit semantics.
struct ChainCheck {
  Truth truth = Truth::undecided;
  std::string reason;
  std::optional<std::size_t> failing_index;
};
ChainCheck check_free_chain(const FunctionFamily& fam, const std::vector<std::vector<MemberId>>& chain,
                            std::size_t pieces, std::size_t cap = kDefaultDecompositionCap);

/// n + 1 copies of the identity tuple (0, ..., n-1): every n members have
/// a transversal, all n + 1 do not.
FunctionFamily gen_hall(std::size_t n);

/// 2^k members, one per binary string b of length k; coordinate i holds
/// the heap code of the prefix of b of length i + 1. Normal, mu = 2^(k+1).
FunctionFamily gen_branches(std::size_t k);

/// Reproducible uniform family.
FunctionFamily gen_random(std::size_t kappa, std::size_t mu, std::size_t count, std::uint64_t seed);

}  // namespace incwb::famfun
