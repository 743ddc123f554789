#include "incwb/famfun.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "incwb/matching.hpp"
#include "incwb/rng.hpp"

namespace incwb::famfun {

FunctionFamily::FunctionFamily(std::size_t kappa, std::size_t mu, std::vector<Tuple> members, bool normal)
    : kappa_(kappa), mu_(mu), normal_(normal), members_(std::move(members)) {
  if (kappa_ == 0) throw InputError("family kappa must be positive");
  if (mu_ == 0) throw InputError("family mu must be positive");
  ranges_.reserve(members_.size());
  for (std::size_t f = 0; f < members_.size(); ++f) {
    const auto& t = members_[f];
    if (t.size() != kappa_) {
      throw InputError("member " + std::to_string(f) + " has length " + std::to_string(t.size()) + ", expected " +
                       std::to_string(kappa_));
    }
    for (Value v : t) {
      if (v >= mu_) throw InputError("member " + std::to_string(f) + " has value " + std::to_string(v) + " >= mu");
    }
    std::vector<Value> r = t;
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    ranges_.push_back(std::move(r));
  }
  if (normal_) {
    std::map<Value, std::size_t> coordinate_of;
    for (const auto& t : members_) {
      for (std::size_t i = 0; i < kappa_; ++i) {
        auto [it, fresh] = coordinate_of.emplace(t[i], i);
        if (!fresh && it->second != i) {
          throw InputError("family is not normal: value " + std::to_string(t[i]) + " occurs at coordinates " +
                           std::to_string(it->second) + " and " + std::to_string(i));
        }
      }
    }
    std::set<std::vector<Value>> seen;
    for (const auto& r : ranges_) {
      if (!seen.insert(r).second) throw InputError("family is not normal: two members share a range");
    }
  }
}

std::string FunctionFamily::member_name(MemberId f) { return "f" + std::to_string(f); }

std::vector<MemberId> FunctionFamily::all() const {
  std::vector<MemberId> v(members_.size());
  std::iota(v.begin(), v.end(), MemberId{0});
  return v;
}

namespace {

std::vector<MemberId> checked(const FunctionFamily& fam, const std::vector<MemberId>& sub) {
  return normalize_subset(sub, fam.size(), "subfamily");
}

// Matching of members (left) against values (right); values tried in
// increasing order.
TransversalResult match(const FunctionFamily& fam, const std::vector<MemberId>& members) {
  matching::BipartiteMatcher m(members.size(), fam.mu());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Value v : fam.range(members[i])) m.add_edge(i, v);
  TransversalResult out;
  if (m.solve() == members.size()) {
    Transversal t;
    for (std::size_t i = 0; i < members.size(); ++i) t.choice.emplace(members[i], *m.mate_of_left(i));
    out.transversal = std::move(t);
  } else {
    for (auto i : m.hall_violator()) out.blocking.push_back(members[i]);
    std::sort(out.blocking.begin(), out.blocking.end());
  }
  return out;
}

}  // namespace

bool is_valid_transversal(const FunctionFamily& fam, const std::vector<MemberId>& sub_in, const Transversal& t) {
  const auto sub = checked(fam, sub_in);
  if (t.choice.size() != sub.size()) return false;
  std::set<Value> used;
  for (MemberId f : sub) {
    auto it = t.choice.find(f);
    if (it == t.choice.end()) return false;
    const auto& r = fam.range(f);
    if (!std::binary_search(r.begin(), r.end(), it->second)) return false;
    if (!used.insert(it->second).second) return false;
  }
  return true;
}

TransversalResult find_transversal(const FunctionFamily& fam, const std::vector<MemberId>& sub) {
  return match(fam, checked(fam, sub));
}

bool is_valid_decomposition(const FunctionFamily& fam, const std::vector<MemberId>& sub_in,
                            const FreeDecomposition& d) {
  const auto sub = checked(fam, sub_in);
  if (d.pieces.size() != d.transversals.size()) return false;
  std::vector<MemberId> covered;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    if (!is_valid_transversal(fam, d.pieces[i], d.transversals[i])) return false;
    covered.insert(covered.end(), d.pieces[i].begin(), d.pieces[i].end());
  }
  std::sort(covered.begin(), covered.end());
  return covered == sub;
}

FreeFamilyResult is_free_family(const FunctionFamily& fam, const std::vector<MemberId>& sub_in, std::size_t pieces,
                                std::size_t cap) {
  const auto sub = checked(fam, sub_in);
  FreeFamilyResult result;
  if (sub.size() > cap) {
    result.note = "subfamily has " + std::to_string(sub.size()) + " members, cap is " + std::to_string(cap);
    return result;
  }
  if (pieces == 0) {
    if (sub.empty()) {
      result.truth = Truth::yes;
      result.decomposition = FreeDecomposition{};
    } else {
      result.truth = Truth::no;
    }
    return result;
  }

  // Fail-first: smallest ranges are placed first.
  std::vector<MemberId> members = sub;
  std::stable_sort(members.begin(), members.end(),
                   [&](MemberId a, MemberId b) { return fam.range(a).size() < fam.range(b).size(); });
  std::vector<std::vector<MemberId>> assignment(pieces);
  std::size_t used = 0;

  auto piece_feasible = [&](const std::vector<MemberId>& piece) {
    std::vector<MemberId> sorted = piece;
    std::sort(sorted.begin(), sorted.end());
    return match(fam, sorted).transversal.has_value();
  };

  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == members.size()) return true;
    const std::size_t limit = std::min(used + 1, pieces);
    for (std::size_t p = 0; p < limit; ++p) {
      assignment[p].push_back(members[k]);
      const bool opened = p == used;
      if (opened) ++used;
      if (piece_feasible(assignment[p]) && self(self, k + 1)) return true;
      if (opened) --used;
      assignment[p].pop_back();
    }
    return false;
  };

  if (!search(search, 0)) {
    result.truth = Truth::no;
    return result;
  }
  FreeDecomposition d;
  for (auto& piece : assignment) {
    std::sort(piece.begin(), piece.end());
    d.transversals.push_back(*match(fam, piece).transversal);
    d.pieces.push_back(std::move(piece));
  }
  result.truth = Truth::yes;
  result.decomposition = std::move(d);
  return result;
}

FamilyLambdaFreeResult check_family_lambda_free(const FunctionFamily& fam, std::size_t lambda,
                                                std::uint64_t max_subsets) {
  FamilyLambdaFreeResult result;
  if (lambda == 0) {
    result.truth = Truth::yes;
    return result;
  }
  const std::size_t n = fam.size();
  const std::size_t top = std::min(lambda - 1, n);
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= top; ++k) {
    const auto c = binomial(n, k);
    total = (total > UINT64_MAX - c) ? UINT64_MAX : total + c;
  }
  if (total > max_subsets) {
    result.note = std::to_string(total) + " subfamilies exceed the scan cap " + std::to_string(max_subsets);
    return result;
  }
  for (std::size_t k = 0; k <= top; ++k) {
    const bool finished = for_each_k_subset(n, k, [&](const std::vector<std::size_t>& s) {
      ++result.subsets_checked;
      if (match(fam, s).transversal) return true;
      result.minimal_failure = s;
      return false;
    });
    if (!finished) {
      result.truth = Truth::no;
      return result;
    }
  }
  result.truth = Truth::yes;
  return result;
}

ChainCheck check_free_chain(const FunctionFamily& fam, const std::vector<std::vector<MemberId>>& chain_in,
                            std::size_t pieces, std::size_t cap) {
  std::vector<std::vector<MemberId>> chain;
  for (const auto& s : chain_in) chain.push_back(checked(fam, s));
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!std::includes(chain[i + 1].begin(), chain[i + 1].end(), chain[i].begin(), chain[i].end())) {
      throw InputError("subfamily chain is not increasing at index " + std::to_string(i));
    }
  }
  ChainCheck out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto r = is_free_family(fam, chain[i], pieces, cap);
    if (r.truth != Truth::yes) {
      out.truth = r.truth;
      out.failing_index = i;
      out.reason = r.truth == Truth::no ? "chain member " + std::to_string(i) + " is not free"
                                        : "chain member " + std::to_string(i) + " undecided: " + r.note;
      return out;
    }
  }
  out.truth = Truth::yes;
  out.reason = "every chain member is free";
  return out;
}

FunctionFamily gen_hall(std::size_t n) {
  if (n == 0) throw InputError("gen_hall needs n >= 1");
  Tuple identity(n);
  std::iota(identity.begin(), identity.end(), Value{0});
  return FunctionFamily(n, n, std::vector<Tuple>(n + 1, identity));
}

FunctionFamily gen_branches(std::size_t k) {
  if (k == 0 || k > 20) throw InputError("gen_branches needs 1 <= k <= 20");
  const std::size_t count = std::size_t{1} << k;
  std::vector<Tuple> members;
  members.reserve(count);
  for (std::size_t b = 0; b < count; ++b) {
    Tuple t(k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t len = i + 1;
      t[i] = ((std::size_t{1} << len) - 1) + (b >> (k - len));
    }
    members.push_back(std::move(t));
  }
  return FunctionFamily(k, std::size_t{1} << (k + 1), std::move(members), true);
}

FunctionFamily gen_random(std::size_t kappa, std::size_t mu, std::size_t count, std::uint64_t seed) {
  if (kappa == 0 || mu == 0) throw InputError("gen_random needs positive kappa and mu");
  Rng rng(seed);
  std::vector<Tuple> members(count, Tuple(kappa));
  for (auto& t : members)
    for (auto& v : t) v = rng.below(mu);
  return FunctionFamily(kappa, mu, std::move(members));
}

}  // namespace incwb::famfun
