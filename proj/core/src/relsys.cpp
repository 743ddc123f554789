#include "incwb/relsys.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace incwb::relsys {

RelationSystem::RelationSystem(std::vector<std::string> ground, std::size_t kappa,
                               std::vector<std::vector<Pair>> relations)
    : ground_(std::move(ground)), kappa_(kappa), relations_(std::move(relations)) {
  if (kappa_ == 0 || kappa_ > kMaxIndex) {
    throw InputError("kappa must lie in [1, " + std::to_string(kMaxIndex) + "], got " + std::to_string(kappa_));
  }
  if (relations_.size() > kappa_) throw InputError("more relations than kappa");
  relations_.resize(kappa_);
  for (ElementId i = 0; i < ground_.size(); ++i) {
    if (!index_.emplace(ground_[i], i).second) throw InputError("duplicate element '" + ground_[i] + "'");
  }
  const std::size_t n = ground_.size();
  labels_.assign(n * n, IndexSet{});
  for (std::size_t zeta = 0; zeta < kappa_; ++zeta) {
    auto& rel = relations_[zeta];
    for (const auto& [nu, eta] : rel) {
      if (nu >= n || eta >= n) throw InputError("relation pair refers to an element outside the ground set");
      if (nu == eta) throw InputError("relation R_" + std::to_string(zeta) + " is not irreflexive at '" + ground_[nu] + "'");
      labels_[nu * n + eta].insert(zeta);
    }
    std::sort(rel.begin(), rel.end());
    rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  }
}

RelationSystem RelationSystem::from_names(
    std::vector<std::string> ground, std::size_t kappa,
    const std::vector<std::vector<std::pair<std::string, std::string>>>& relations) {
  std::unordered_map<std::string, ElementId> idx;
  for (ElementId i = 0; i < ground.size(); ++i) idx.emplace(ground[i], i);
  auto lookup = [&](const std::string& s) {
    auto it = idx.find(s);
    if (it == idx.end()) throw InputError("relation refers to unknown element '" + s + "'");
    return it->second;
  };
  std::vector<std::vector<Pair>> rels;
  rels.reserve(relations.size());
  for (const auto& r : relations) {
    auto& out = rels.emplace_back();
    for (const auto& [a, b] : r) out.emplace_back(lookup(a), lookup(b));
  }
  return RelationSystem(std::move(ground), kappa, std::move(rels));
}

std::optional<ElementId> RelationSystem::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId RelationSystem::index_of(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw InputError("unknown element '" + std::string(name) + "'");
}

Subset RelationSystem::all() const {
  Subset s(ground_.size());
  for (ElementId i = 0; i < s.size(); ++i) s[i] = i;
  return s;
}

Subset RelationSystem::subset_of(const std::vector<std::string>& names) const {
  Subset s;
  s.reserve(names.size());
  for (const auto& n : names) s.push_back(index_of(n));
  return normalize_subset(std::move(s), size(), "subset");
}

std::string_view to_string(Clause c) {
  switch (c) {
    case Clause::colour_range:
      return "colour-range";
    case Clause::order:
      return "order";
    case Clause::exceptions:
      return "exceptions";
  }
  return "exceptions";
}

namespace {

Subset checked_subset(const RelationSystem& sys, const Subset& b) { return normalize_subset(b, sys.size(), "subset"); }

void check_domain(const Subset& b, const ColourMap& h) {
  if (h.size() != b.size() ||
      !std::equal(b.begin(), b.end(), h.begin(), [](ElementId e, const auto& kv) { return e == kv.first; })) {
    throw InputError("colour map is not defined exactly on the subset");
  }
}

void check_domain(const Subset& b, const FreenessWitness& w) {
  check_domain(b, w.colour);
  Subset sorted = w.order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != b) throw InputError("witness order is not an ordering of the subset");
}

std::size_t colour_space_of(const RelationSystem& sys, const WitnessOptions& opts) {
  return opts.colour_space == 0 ? sys.kappa() : opts.colour_space;
}

// Depth-first search over colour maps of a subset, in lexicographic order of
// (h(b_0), h(b_1), ...) for b sorted. Partial maps are pruned as soon as an
// exception set reaches kappa or a forbidden same-colour pair appears.
class ColourSearch {
 public:
  ColourSearch(const RelationSystem& sys, const Subset& b, std::size_t colours)
      : sys_(sys), b_(b), n_(b.size()), colours_(colours), rel_(n_ * n_), counts_(n_ * n_, true),
        forbidden_(n_ * n_, false), h_(n_, 0), exceptions_(n_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) rel_[i * n_ + j] = sys.labels(b[i], b[j]);
  }

  /// counts(src, dst): a same-colour relation src -> dst adds to exp(dst).
  void set_counts(const std::function<bool(std::size_t, std::size_t)>& f) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) counts_[i * n_ + j] = f(i, j);
  }
  /// forbidden(src, dst): a same-colour relation src -> dst is not allowed.
  void set_forbidden(const std::function<bool(std::size_t, std::size_t)>& f) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) forbidden_[i * n_ + j] = f(i, j);
  }

  IndexSet rel(std::size_t src, std::size_t dst) const { return rel_[src * n_ + dst]; }

  /// Visits complete colour maps (local index -> colour); stops when the
  /// visitor returns false.
  void run(const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    for (auto& e : exceptions_) e = IndexSet{};
    dfs(0);
  }

 private:
  void dfs(std::size_t i) {
    if (stop_) return;
    if (i == n_) {
      stop_ = !(*visit_)(h_);
      return;
    }
    const std::size_t kappa = sys_.kappa();
    std::vector<std::pair<std::size_t, IndexSet>> saved;
    for (std::size_t c = 0; c < colours_ && !stop_; ++c) {
      saved.clear();
      IndexSet own;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (h_[j] != c) continue;
        const IndexSet in = rel(j, i);
        const IndexSet out = rel(i, j);
        if ((!in.empty() && forbidden_[j * n_ + i]) || (!out.empty() && forbidden_[i * n_ + j])) {
          ok = false;
          break;
        }
        if (counts_[j * n_ + i]) own |= in;
        if (counts_[i * n_ + j] && !out.is_subset_of(exceptions_[j])) {
          saved.emplace_back(j, exceptions_[j]);
          exceptions_[j] |= out;
          if (exceptions_[j].size() >= kappa) ok = false;
        }
      }
      if (ok && own.size() < kappa) {
        h_[i] = c;
        exceptions_[i] = own;
        dfs(i + 1);
        exceptions_[i] = IndexSet{};
      }
      for (auto it = saved.rbegin(); it != saved.rend(); ++it) exceptions_[it->first] = it->second;
    }
  }

  const RelationSystem& sys_;
  const Subset& b_;
  std::size_t n_;
  std::size_t colours_;
  std::vector<IndexSet> rel_;
  std::vector<bool> counts_;
  std::vector<bool> forbidden_;
  std::vector<std::size_t> h_;
  std::vector<IndexSet> exceptions_;
  const std::function<bool(const std::vector<std::size_t>&)>* visit_ = nullptr;
  bool stop_ = false;
};

ColourMap to_colour_map(const Subset& b, const std::vector<std::size_t>& local) {
  ColourMap h;
  for (std::size_t i = 0; i < b.size(); ++i) h.emplace(b[i], local[i]);
  return h;
}

// Lexicographically least linear extension of the same-colour relation
// digraph; empty optional when it has a cycle.
std::optional<std::vector<std::size_t>> least_topological_order(const ColourSearch& search, std::size_t n,
                                                                const std::vector<std::size_t>& h) {
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && h[i] == h[j] && !search.rel(i, j).empty()) ++indegree[j];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push(i);
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    order.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && h[i] == h[j] && !search.rel(i, j).empty() && --indegree[j] == 0) ready.push(j);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

std::optional<std::string> cap_exceeded(std::size_t elements, std::size_t element_cap, std::size_t colours,
                                        const SearchCaps& caps) {
  if (elements > element_cap) {
    return "subset has " + std::to_string(elements) + " elements, cap is " + std::to_string(element_cap);
  }
  if (colours > caps.max_colours) {
    return "colour space " + std::to_string(colours) + " exceeds cap " + std::to_string(caps.max_colours);
  }
  return std::nullopt;
}

std::vector<ElementId> to_elements(const Subset& b, const std::vector<std::size_t>& local_order) {
  std::vector<ElementId> out;
  out.reserve(local_order.size());
  for (auto i : local_order) out.push_back(b[i]);
  return out;
}

}  // namespace

IndexSet exp_set(const RelationSystem& sys, const Subset& b_in, ElementId eta, const FreenessWitness& w) {
  const Subset b = checked_subset(sys, b_in);
  if (!std::binary_search(b.begin(), b.end(), eta)) throw InputError("element is not in the subset");
  check_domain(b, w);
  const std::size_t h_eta = w.colour.at(eta);
  IndexSet out;
  for (ElementId nu : w.order) {
    if (nu == eta) break;
    if (w.colour.at(nu) == h_eta) out |= sys.labels(nu, eta);
  }
  return out;
}

IndexSet weak_exp_set(const RelationSystem& sys, const Subset& b_in, ElementId eta, const ColourMap& h) {
  const Subset b = checked_subset(sys, b_in);
  if (!std::binary_search(b.begin(), b.end(), eta)) throw InputError("element is not in the subset");
  check_domain(b, h);
  const std::size_t h_eta = h.at(eta);
  IndexSet out;
  for (const auto& [nu, c] : h) {
    if (nu != eta && c == h_eta) out |= sys.labels(nu, eta);
  }
  return out;
}

WitnessVerdict verify_witness(const RelationSystem& sys, const Subset& b_in, const FreenessWitness& w,
                              const WitnessOptions& opts) {
  const Subset b = checked_subset(sys, b_in);
  check_domain(b, w);
  const std::size_t colours = colour_space_of(sys, opts);
  WitnessVerdict verdict;
  for (const auto& [e, c] : w.colour) {
    if (c >= colours) {
      verdict.violations.push_back({Clause::colour_range, e, std::nullopt, std::nullopt,
                                    "h(" + sys.name(e) + ") = " + std::to_string(c) + " is outside the colour space " +
                                        std::to_string(colours)});
    }
  }
  std::map<ElementId, std::size_t> position;
  for (std::size_t i = 0; i < w.order.size(); ++i) position[w.order[i]] = i;
  if (opts.enforce_order_clause) {
    for (ElementId nu : b) {
      for (ElementId eta : b) {
        if (nu == eta || w.colour.at(nu) != w.colour.at(eta)) continue;
        const IndexSet l = sys.labels(nu, eta);
        if (!l.empty() && position[nu] > position[eta]) {
          verdict.violations.push_back({Clause::order, eta, nu, l.front(),
                                        sys.name(nu) + " R_" + std::to_string(l.front()) + " " + sys.name(eta) +
                                            " with equal colour, but " + sys.name(nu) + " comes later"});
        }
      }
    }
  }
  for (ElementId eta : w.order) {
    const IndexSet ex = exp_set(sys, b, eta, w);
    if (ex.size() >= sys.kappa()) {
      verdict.violations.push_back({Clause::exceptions, eta, std::nullopt, std::nullopt,
                                    "|exp(" + sys.name(eta) + ")| = " + std::to_string(ex.size()) + " is not below kappa = " +
                                        std::to_string(sys.kappa())});
    }
  }
  return verdict;
}

FreenessResult is_free(const RelationSystem& sys, const Subset& b_in, const SearchCaps& caps,
                       const WitnessOptions& opts) {
  const Subset b = checked_subset(sys, b_in);
  const std::size_t n = b.size();
  const std::size_t colours = colour_space_of(sys, opts);
  FreenessResult result;
  if (auto why = cap_exceeded(n, caps.max_elements, colours, caps)) {
    result.note = *why;
    return result;
  }
  ColourSearch search(sys, b, colours);
  if (opts.enforce_order_clause) {
    // With the ordering clause every same-colour predecessor is earlier, so
    // exp does not depend on the order: search colour maps, then take the
    // least linear extension.
    std::vector<std::size_t> identity(n);
    for (std::size_t i = 0; i < n; ++i) identity[i] = i;
    std::optional<std::vector<std::size_t>> best_order;
    std::vector<std::size_t> best_h;
    search.run([&](const std::vector<std::size_t>& h) {
      auto order = least_topological_order(search, n, h);
      if (!order) return true;
      if (!best_order || *order < *best_order) {
        best_order = std::move(order);
        best_h = h;
      }
      return *best_order != identity;
    });
    if (best_order) {
      result.truth = Truth::yes;
      result.witness = FreenessWitness{to_colour_map(b, best_h), to_elements(b, *best_order)};
    } else {
      result.truth = Truth::no;
    }
    return result;
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  do {
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;
    search.set_counts([&](std::size_t src, std::size_t dst) { return pos[src] < pos[dst]; });
    std::optional<std::vector<std::size_t>> found;
    search.run([&](const std::vector<std::size_t>& h) {
      found = h;
      return false;
    });
    if (found) {
      result.truth = Truth::yes;
      result.witness = FreenessWitness{to_colour_map(b, *found), to_elements(b, perm)};
      return result;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  result.truth = Truth::no;
  return result;
}

StrongFreenessResult is_strongly_free(const RelationSystem& sys, const Subset& b_in, const SearchCaps& caps,
                                      const WitnessOptions& opts) {
  const Subset b = checked_subset(sys, b_in);
  const std::size_t n = b.size();
  const std::size_t colours = colour_space_of(sys, opts);
  StrongFreenessResult result;
  if (auto why = cap_exceeded(n, caps.max_strong_elements, colours, caps)) {
    result.note = *why;
    return result;
  }
  ColourSearch search(sys, b, colours);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  do {
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;
    search.set_counts([&](std::size_t src, std::size_t dst) { return pos[src] < pos[dst]; });
    if (opts.enforce_order_clause) {
      search.set_forbidden([&](std::size_t src, std::size_t dst) { return pos[src] > pos[dst]; });
    }
    std::optional<std::vector<std::size_t>> found;
    search.run([&](const std::vector<std::size_t>& h) {
      found = h;
      return false;
    });
    if (!found) {
      result.truth = Truth::no;
      result.certificate.clear();
      result.failing_order = to_elements(b, perm);
      return result;
    }
    result.certificate.push_back(FreenessWitness{to_colour_map(b, *found), to_elements(b, perm)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  result.truth = Truth::yes;
  return result;
}

WeakFreenessResult is_weakly_free(const RelationSystem& sys, const Subset& b_in, const SearchCaps& caps,
                                  const WitnessOptions& opts) {
  const Subset b = checked_subset(sys, b_in);
  const std::size_t colours = colour_space_of(sys, opts);
  WeakFreenessResult result;
  if (auto why = cap_exceeded(b.size(), caps.max_elements, colours, caps)) {
    result.note = *why;
    return result;
  }
  ColourSearch search(sys, b, colours);
  search.run([&](const std::vector<std::size_t>& h) {
    result.colouring = to_colour_map(b, h);
    return false;
  });
  result.truth = result.colouring ? Truth::yes : Truth::no;
  return result;
}

LambdaFreeResult check_lambda_free(const RelationSystem& sys, std::size_t lambda, const SearchCaps& caps,
                                   const WitnessOptions& opts) {
  LambdaFreeResult result;
  const std::size_t n = sys.size();
  const std::size_t top = lambda == 0 ? 0 : std::min(lambda - 1, n);
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= top && lambda > 0; ++k) {
    const auto c = binomial(n, k);
    total = (total > UINT64_MAX - c) ? UINT64_MAX : total + c;
  }
  if (total > caps.max_subsets) {
    result.note = std::to_string(total) + " subsets exceed the scan cap " + std::to_string(caps.max_subsets);
    return result;
  }
  bool undecided = false;
  for (std::size_t k = 0; k <= top && lambda > 0; ++k) {
    const bool finished = for_each_k_subset(n, k, [&](const std::vector<std::size_t>& s) {
      ++result.subsets_checked;
      const auto r = is_free(sys, s, caps, opts);
      if (r.truth == Truth::no) {
        result.minimal_failure = s;
        return false;
      }
      if (r.truth == Truth::undecided) {
        undecided = true;
        if (result.note.empty()) result.note = r.note;
      }
      return true;
    });
    if (!finished) {
      result.truth = Truth::no;
      return result;
    }
  }
  result.truth = undecided ? Truth::undecided : Truth::yes;
  return result;
}

IncVerdict verify_inc_witness(const IncSystemWitness& w, const SearchCaps& caps, const WitnessOptions& opts) {
  const auto& sys = w.system;
  if (w.chain.empty()) throw InputError("chain is empty");
  std::vector<Subset> chain;
  chain.reserve(w.chain.size());
  for (const auto& s : w.chain) chain.push_back(normalize_subset(s, sys.size(), "chain member"));
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!std::includes(chain[i + 1].begin(), chain[i + 1].end(), chain[i].begin(), chain[i].end())) {
      throw InputError("chain is not increasing at index " + std::to_string(i));
    }
  }
  if (chain.back() != sys.all()) throw InputError("chain union is not the ground set");

  IncVerdict verdict;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto r = is_free(sys, chain[i], caps, opts);
    if (r.truth == Truth::no) {
      verdict.truth = Truth::no;
      verdict.failing_index = i;
      verdict.reason = "chain member " + std::to_string(i) + " is not free";
      if (chain[i].size() == sys.size()) verdict.reason += " (it is the whole ground set)";
      return verdict;
    }
    if (r.truth == Truth::undecided) {
      verdict.truth = Truth::undecided;
      verdict.failing_index = i;
      verdict.reason = "freeness of chain member " + std::to_string(i) + " undecided: " + r.note;
      return verdict;
    }
  }
  const auto whole = is_free(sys, sys.all(), caps, opts);
  if (whole.truth == Truth::yes) {
    verdict.truth = Truth::no;
    verdict.reason = "the ground set is free";
  } else if (whole.truth == Truth::undecided) {
    verdict.truth = Truth::undecided;
    verdict.reason = "freeness of the ground set undecided: " + whole.note;
  } else {
    verdict.truth = Truth::yes;
    verdict.reason = "every chain member is free and the ground set is not";
  }
  return verdict;
}

}  // namespace incwb::relsys
