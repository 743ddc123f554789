#include "incwb/common.hpp"

#include <algorithm>
#include <limits>

namespace incwb {

std::string_view to_string(Truth t) {
  switch (t) {
    case Truth::yes:
      return "yes";
    case Truth::no:
      return "no";
    case Truth::undecided:
      return "undecided";
  }
  return "undecided";
}

IndexSet IndexSet::full(std::size_t n) {
  if (n > kMaxIndex) throw InputError("index set universe exceeds " + std::to_string(kMaxIndex));
  if (n == kMaxIndex) return from_bits(~std::uint64_t{0});
  return from_bits((std::uint64_t{1} << n) - 1);
}

void IndexSet::insert(std::size_t i) {
  if (i >= kMaxIndex) throw InputError("index " + std::to_string(i) + " out of IndexSet range");
  bits_ |= std::uint64_t{1} << i;
}

std::vector<std::size_t> IndexSet::to_vector() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

std::vector<std::size_t> normalize_subset(std::vector<std::size_t> s, std::size_t universe,
                                          std::string_view what) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!s.empty() && s.back() >= universe) {
    throw InputError(std::string(what) + ": index " + std::to_string(s.back()) + " is not in the universe of size " +
                     std::to_string(universe));
  }
  return s;
}

bool is_permutation_of_range(const std::vector<std::size_t>& v, std::size_t n) {
  if (v.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto x : v) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    r = r * num / i;
  }
  return r;
}

}  // namespace incwb
