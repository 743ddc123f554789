#include "incwb/colouring.hpp"

#include <algorithm>
#include <limits>

namespace incwb::graph {

bool is_proper(const Graph& g, const Colouring& c) {
  if (c.size() != g.size()) {
    throw InputError("colouring covers " + std::to_string(c.size()) + " nodes but the graph has " +
                     std::to_string(g.size()));
  }
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return c.colour[e.u] == c.colour[e.v]; });
}

namespace {

constexpr std::size_t kUncoloured = std::numeric_limits<std::size_t>::max();

// DSATUR branch-and-bound. Looks for a colouring with fewer than `bound`
// colours and stops as soon as one with at most `stop_at` colours exists.
class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, std::size_t bound, std::size_t stop_at, std::uint64_t budget)
      : g_(g),
        n_(g.size()),
        colour_(n_, kUncoloured),
        neighbour_colours_(n_ * (n_ + 1), 0),
        saturation_(n_, 0),
        uncoloured_degree_(n_, 0),
        best_(bound),
        stop_at_(stop_at),
        budget_(budget) {
    for (NodeId v = 0; v < n_; ++v) uncoloured_degree_[v] = g.degree(v);
  }

  void run() { search(0, 0); }

  bool aborted() const { return aborted_; }
  bool found() const { return found_; }
  std::size_t best() const { return best_; }
  const std::vector<std::size_t>& best_colouring() const { return best_colouring_; }
  std::uint64_t steps() const { return steps_; }

 private:
  std::uint32_t& count(NodeId v, std::size_t c) { return neighbour_colours_[v * (n_ + 1) + c]; }

  NodeId pick() const {
    NodeId chosen = n_;
    for (NodeId v = 0; v < n_; ++v) {
      if (colour_[v] != kUncoloured) continue;
      if (chosen == n_ || saturation_[v] > saturation_[chosen] ||
          (saturation_[v] == saturation_[chosen] && uncoloured_degree_[v] > uncoloured_degree_[chosen])) {
        chosen = v;
      }
    }
    return chosen;
  }

  void assign(NodeId v, std::size_t c) {
    colour_[v] = c;
    for (NodeId w : g_.neighbours(v)) {
      if (count(w, c)++ == 0) ++saturation_[w];
      --uncoloured_degree_[w];
    }
  }

  void unassign(NodeId v) {
    const std::size_t c = colour_[v];
    for (NodeId w : g_.neighbours(v)) {
      if (--count(w, c) == 0) --saturation_[w];
      ++uncoloured_degree_[w];
    }
    colour_[v] = kUncoloured;
  }

  void search(std::size_t coloured, std::size_t used) {
    if (done_ || aborted_ || used >= best_) return;
    if (++steps_ > budget_) {
      aborted_ = true;
      return;
    }
    if (coloured == n_) {
      best_ = used;
      best_colouring_ = colour_;
      found_ = true;
      if (best_ <= stop_at_) done_ = true;
      return;
    }
    const NodeId v = pick();
    for (std::size_t c = 0; c <= used && c + 1 < best_; ++c) {
      if (count(v, c) != 0) continue;
      assign(v, c);
      search(coloured + 1, std::max(used, c + 1));
      unassign(v);
      if (done_ || aborted_) return;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> colour_;
  std::vector<std::uint32_t> neighbour_colours_;
  std::vector<std::size_t> saturation_;
  std::vector<std::size_t> uncoloured_degree_;
  std::size_t best_;
  std::size_t stop_at_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  bool aborted_ = false;
  bool done_ = false;
  bool found_ = false;
  std::vector<std::size_t> best_colouring_;
};

void check_budget(std::uint64_t budget) {
  if (budget == 0) throw InputError("solver budget must be positive");
}

}  // namespace

std::size_t greedy_clique_size(const Graph& g) {
  std::size_t best = g.empty() ? 0 : 1;
  for (NodeId start = 0; start < g.size(); ++start) {
    std::vector<NodeId> candidates(g.neighbours(start).begin(), g.neighbours(start).end());
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
    std::vector<NodeId> clique{start};
    for (NodeId v : candidates) {
      if (std::all_of(clique.begin(), clique.end(), [&](NodeId u) { return g.adjacent(u, v); })) clique.push_back(v);
    }
    best = std::max(best, clique.size());
  }
  return best;
}

ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget) {
  check_budget(budget);
  ChromaticResult result;
  if (g.empty()) {
    result.exact = true;
    return result;
  }
  const std::size_t lower = greedy_clique_size(g);
  DsaturSearch search(g, g.size() + 1, lower, budget);
  search.run();
  result.steps = search.steps();
  result.lower = lower;
  if (search.found()) {
    result.upper = search.best();
    result.best.colour = search.best_colouring();
  } else {
    // Budget ran out before the first descent finished: fall back to first-fit.
    result.best = greedy_colour(g, degeneracy_order(g));
    result.upper = result.best.colour_bound();
  }
  result.exact = !search.aborted() || result.lower == result.upper;
  if (result.exact) result.lower = result.upper;
  return result;
}

KColouringResult find_colouring(const Graph& g, std::size_t k, std::uint64_t budget) {
  check_budget(budget);
  KColouringResult result;
  if (g.empty()) {
    result.status = Truth::yes;
    result.colouring = Colouring{};
    return result;
  }
  if (k == 0 || greedy_clique_size(g) > k) {
    result.status = Truth::no;
    return result;
  }
  DsaturSearch search(g, k + 1, k, budget);
  search.run();
  result.steps = search.steps();
  if (search.found()) {
    result.status = Truth::yes;
    result.colouring = Colouring{search.best_colouring()};
  } else {
    result.status = search.aborted() ? Truth::undecided : Truth::no;
  }
  return result;
}

std::size_t colouring_number(const Graph& g) {
  if (g.empty()) return 0;
  return max_back_degree(g, degeneracy_order(g)) + 1;
}

NodeOrder degeneracy_order(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  for (NodeId v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<NodeId> deletion;
  deletion.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    NodeId chosen = n;
    for (NodeId v = 0; v < n; ++v) {
      if (!removed[v] && (chosen == n || degree[v] < degree[chosen])) chosen = v;
    }
    removed[chosen] = true;
    deletion.push_back(chosen);
    for (NodeId w : g.neighbours(chosen)) {
      if (!removed[w]) --degree[w];
    }
  }
  std::reverse(deletion.begin(), deletion.end());
  return NodeOrder(std::move(deletion), n);
}

std::size_t max_back_degree(const Graph& g, const NodeOrder& ord) {
  if (ord.size() != g.size()) throw InputError("node order does not cover the graph");
  std::size_t worst = 0;
  for (NodeId v = 0; v < g.size(); ++v) {
    const auto pos = ord.position(v);
    const auto back = static_cast<std::size_t>(
        std::count_if(g.neighbours(v).begin(), g.neighbours(v).end(), [&](NodeId w) { return ord.position(w) < pos; }));
    worst = std::max(worst, back);
  }
  return worst;
}

Colouring greedy_colour(const Graph& g, const NodeOrder& ord) {
  if (ord.size() != g.size()) throw InputError("node order does not cover the graph");
  Colouring c{std::vector<std::size_t>(g.size(), kUncoloured)};
  std::vector<bool> taken;
  for (std::size_t i = 0; i < ord.size(); ++i) {
    const NodeId v = ord[i];
    taken.assign(g.degree(v) + 1, false);
    for (NodeId w : g.neighbours(v)) {
      const auto cw = c.colour[w];
      if (cw != kUncoloured && cw < taken.size()) taken[cw] = true;
    }
    std::size_t pick = 0;
    while (taken[pick]) ++pick;
    c.colour[v] = pick;
  }
  return c;
}

}  // namespace incwb::graph
