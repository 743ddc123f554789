#include "incwb/incompact.hpp"

#include <algorithm>
#include <set>

#include "incwb/rng.hpp"

namespace incwb::incompact {

namespace {

std::set<std::string> name_set(const Graph& g) { return {g.names().begin(), g.names().end()}; }

std::set<std::pair<std::string, std::string>> named_edges(const Graph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& e : g.edges()) {
    auto a = g.name(e.u);
    auto b = g.name(e.v);
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

Truth below(const graph::ChromaticResult& r, std::size_t chi) {
  if (r.upper < chi) return Truth::yes;
  if (r.lower >= chi) return Truth::no;
  return Truth::undecided;
}

}  // namespace

ChainVerdict check_inc_chain(const IncChain& c, std::uint64_t budget) {
  ChainVerdict v;
  if (c.graphs.empty()) throw InputError("chain has no graphs");
  const std::size_t last = c.graphs.size() - 1;
  const Graph& top = c.graphs[last];
  const auto top_names = name_set(top);
  std::set<std::string> seen;
  for (std::size_t i = 0; i <= last; ++i) {
    const auto names = name_set(c.graphs[i]);
    if (!std::includes(top_names.begin(), top_names.end(), names.begin(), names.end())) {
      v.structural_faults.push_back("G_" + std::to_string(i) + " has nodes outside the last graph");
    } else if (named_edges(c.graphs[i]) !=
               named_edges(graph::induced_subgraph(top, std::vector<std::string>(names.begin(), names.end())))) {
      v.structural_faults.push_back("G_" + std::to_string(i) + " is not an induced subgraph of the last graph");
    }
    if (!std::includes(names.begin(), names.end(), seen.begin(), seen.end())) {
      v.structural_faults.push_back("node sets are not increasing at index " + std::to_string(i));
    }
    if (std::find(c.limits.begin(), c.limits.end(), i) != c.limits.end() && names != seen) {
      v.structural_faults.push_back("limit index " + std::to_string(i) + " is not the union of its predecessors");
    }
    seen.insert(names.begin(), names.end());
  }
  for (auto l : c.limits) {
    if (l == 0 || l > last) v.structural_faults.push_back("limit index " + std::to_string(l) + " out of range");
  }
  if (!v.structural_faults.empty()) {
    v.truth = Truth::no;
    v.reason = v.structural_faults.front();
    return v;
  }

  std::optional<std::size_t> undecided_at;
  for (std::size_t i = 0; i <= last; ++i) {
    IndexEvidence e;
    e.index = i;
    e.nodes = c.graphs[i].size();
    e.chromatic = graph::chromatic_number(c.graphs[i], budget);
    if (i < last) {
      e.passes = below(e.chromatic, c.chi0);
    } else {
      const Truth b = below(e.chromatic, c.chi1);
      e.passes = b == Truth::yes ? Truth::no : b == Truth::no ? Truth::yes : Truth::undecided;
    }
    v.evidence.push_back(e);
    if (e.passes == Truth::no && !v.index) {
      v.index = i;
      v.reason = i < last ? "ch(G_" + std::to_string(i) + ") >= " + std::to_string(c.chi0)
                          : "ch(G_" + std::to_string(i) + ") < " + std::to_string(c.chi1);
    }
    if (e.passes == Truth::undecided && !undecided_at) undecided_at = i;
  }
  if (v.index) {
    v.truth = Truth::no;
  } else if (undecided_at) {
    v.truth = Truth::undecided;
    v.index = undecided_at;
    v.reason = "solver budget exhausted at index " + std::to_string(*undecided_at);
  } else {
    v.truth = Truth::yes;
    v.reason = "every proper prefix graph is below chi0 and the last reaches chi1";
  }
  return v;
}

std::string_view to_string(Grade g) { return g == Grade::exhaustive ? "exhaustive" : "sampled"; }

BracketVerdict check_inc_bracket(const Graph& g, std::size_t lambda, std::size_t chi, std::uint64_t budget,
                                 std::uint64_t scan_cap, std::uint64_t seed) {
  if (chi == 0) throw InputError("chi must be positive");
  BracketVerdict v;
  v.whole = graph::chromatic_number(g, budget);
  const Truth whole_below = below(v.whole, chi);
  if (whole_below == Truth::yes) {
    v.truth = Truth::no;
    v.reason = "the whole graph has chromatic number below chi";
    return v;
  }
  const std::size_t n = g.size();
  const std::size_t k = lambda == 0 ? 0 : std::min(lambda - 1, n);
  if (lambda > n && whole_below == Truth::no) {
    std::vector<graph::NodeId> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    v.truth = Truth::no;
    v.small_witness = all;
    v.reason = "the whole graph has fewer than lambda nodes";
    return v;
  }

  bool undecided = whole_below == Truth::undecided;
  auto examine = [&](const std::vector<std::size_t>& s) {
    ++v.subsets_checked;
    const auto r = graph::find_colouring(graph::induced_subgraph(g, std::vector<graph::NodeId>(s.begin(), s.end())),
                                         chi - 1, budget);
    if (r.status == Truth::no) {
      v.small_witness = std::vector<graph::NodeId>(s.begin(), s.end());
      return false;
    }
    if (r.status == Truth::undecided) undecided = true;
    return true;
  };

  if (binomial(n, k) <= scan_cap) {
    v.grade = Grade::exhaustive;
    for_each_k_subset(n, k, examine);
  } else {
    v.grade = Grade::sampled;
    Rng rng(seed);
    std::vector<std::size_t> nodes(n);
    for (std::size_t i = 0; i < n; ++i) nodes[i] = i;
    for (std::uint64_t t = 0; t < scan_cap; ++t) {
      rng.shuffle(nodes);
      std::vector<std::size_t> s(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(k));
      std::sort(s.begin(), s.end());
      if (!examine(s)) break;
    }
  }
  if (v.small_witness) {
    v.truth = Truth::no;
    v.reason = "an induced subgraph on " + std::to_string(k) + " nodes needs at least chi colours";
  } else if (undecided) {
    v.truth = Truth::undecided;
    v.reason = "solver budget exhausted";
  } else {
    v.truth = Truth::yes;
    v.reason = v.grade == Grade::exhaustive ? "all small induced subgraphs are below chi"
                                            : "true on sample: sampled small induced subgraphs are below chi";
  }
  return v;
}

PlusVerdict check_inc_plus(const Graph& g, const PartitionCertificate& cert, std::size_t chi) {
  if (!cert.bound.empty() && cert.bound.size() != cert.parts.size()) {
    throw InputError("bound list must match the number of parts");
  }
  std::vector<bool> covered(g.size(), false);
  std::vector<std::vector<graph::NodeId>> parts;
  for (const auto& part : cert.parts) {
    std::vector<graph::NodeId> ids;
    for (const auto& name : part) {
      const auto id = g.find(name);
      if (!id) throw InputError("partition names unknown node '" + name + "'");
      if (covered[*id]) throw InputError("node '" + name + "' lies in two parts");
      covered[*id] = true;
      ids.push_back(*id);
    }
    parts.push_back(std::move(ids));
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!covered[v]) throw InputError("node '" + g.name(v) + "' is not covered by the partition");
  }

  PlusVerdict out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.colouring_numbers.push_back(graph::colouring_number(graph::induced_subgraph(g, parts[i])));
  }
  if (parts.size() >= chi) {
    out.truth = Truth::no;
    out.reason = "the partition has " + std::to_string(parts.size()) + " parts, not fewer than chi";
    return out;
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto cl = out.colouring_numbers[i];
    if (cl >= chi || (!cert.bound.empty() && (cl > cert.bound[i] || cert.bound[i] >= chi))) {
      out.truth = Truth::no;
      out.failing_part = i;
      out.reason = "part " + std::to_string(i) + " has colouring number " + std::to_string(cl) +
                   (cl >= chi ? ", not below chi" : ", outside its claimed bound");
      return out;
    }
  }
  out.truth = Truth::yes;
  out.reason = "every part has colouring number below chi";
  return out;
}

PlusVerdict check_inc_plus(const IncChain& c, const std::vector<PartitionCertificate>& certs, std::size_t chi) {
  if (c.graphs.empty()) throw InputError("chain has no graphs");
  if (certs.size() != c.graphs.size() - 1) throw InputError("need one certificate per index below the last");
  PlusVerdict out;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    auto r = check_inc_plus(c.graphs[i], certs[i], chi);
    if (r.truth != Truth::yes) {
      r.failing_index = i;
      r.reason = "G_" + std::to_string(i) + ": " + r.reason;
      return r;
    }
  }
  out.truth = Truth::yes;
  out.reason = "every certificate passes";
  return out;
}

}  // namespace incwb::incompact
