#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace incwb {

/// Raised for malformed or out-of-contract input (bad files, domain
/// mismatches, non-subsets). The CLI maps it to exit status 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Three-valued outcome of a bounded exact search.
enum class Truth { yes, no, undecided };

std::string_view to_string(Truth t);

/// Largest number of relations / colour indices representable in an IndexSet.
inline constexpr std::size_t kMaxIndex = 64;

/// A subset of {0, ..., 63}. Used for sets of relation indices (exp sets,
/// the Z sets of the extraction) and small colour sets.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  static constexpr IndexSet from_bits(std::uint64_t bits) {
    IndexSet s;
    s.bits_ = bits;
    return s;
  }
  /// {0, ..., n-1}.
  static IndexSet full(std::size_t n);

  constexpr bool contains(std::size_t i) const { return i < kMaxIndex && ((bits_ >> i) & 1U) != 0; }
  void insert(std::size_t i);
  void erase(std::size_t i) {
    if (i < kMaxIndex) bits_ &= ~(std::uint64_t{1} << i);
  }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  /// Least member; only meaningful when non-empty.
  constexpr std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }
  constexpr bool is_subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<std::size_t> to_vector() const;

  constexpr IndexSet& operator|=(IndexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Sorts and deduplicates; throws InputError on any index >= universe.
std::vector<std::size_t> normalize_subset(std::vector<std::size_t> s, std::size_t universe,
                                          std::string_view what);

/// True iff `v` is a permutation of {0, ..., n-1}.
bool is_permutation_of_range(const std::vector<std::size_t>& v, std::size_t n);

/// Calls `visit(subset)` for every k-subset of {0..n-1} in lexicographic
/// order; stops early when `visit` returns false. Returns false if stopped.
template <class Visit>
bool for_each_k_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return false;
    if (k == 0) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

}  // namespace incwb
