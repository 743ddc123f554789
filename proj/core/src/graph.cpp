#include "incwb/graph.hpp"

#include <algorithm>
#include <set>

#include "incwb/common.hpp"

namespace incwb::graph {

Graph::Graph(std::vector<std::string> nodes, const std::vector<std::pair<std::string, std::string>>& edges) {
  names_ = std::move(nodes);
  for (NodeId i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) throw InputError("duplicate node name '" + names_[i] + "'");
  }
  std::vector<std::pair<NodeId, NodeId>> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) indexed.emplace_back(index_of(a), index_of(b));
  build(indexed);
}

Graph Graph::from_indexed(std::vector<std::string> nodes, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  Graph g;
  g.names_ = std::move(nodes);
  for (NodeId i = 0; i < g.names_.size(); ++i) {
    if (!g.index_.emplace(g.names_[i], i).second) throw InputError("duplicate node name '" + g.names_[i] + "'");
  }
  g.build(edges);
  return g;
}

Graph Graph::with_size(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return from_indexed(std::move(names), edges);
}

void Graph::build(const std::vector<std::pair<NodeId, NodeId>>& edges) {
  const std::size_t n = names_.size();
  std::set<Edge> canonical;
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw InputError("edge endpoint is not a declared node");
    if (a == b) throw InputError("self-loop at node '" + names_[a] + "'");
    canonical.insert(Edge{std::min(a, b), std::max(a, b)});
  }
  edges_.assign(canonical.begin(), canonical.end());
  adjacency_.assign(n, {});
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::optional<NodeId> Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId Graph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown node '" + std::string(name) + "'");
}

bool Graph::adjacent(NodeId u, NodeId v) const {
  if (u >= size() || v >= size()) return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::size_t Colouring::colours_used() const {
  std::vector<std::size_t> c = colour;
  std::sort(c.begin(), c.end());
  return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

std::size_t Colouring::colour_bound() const {
  std::size_t m = 0;
  for (auto c : colour) m = std::max(m, c + 1);
  return m;
}

NodeOrder::NodeOrder(std::vector<NodeId> sequence, std::size_t n) : sequence_(std::move(sequence)) {
  if (!is_permutation_of_range(sequence_, n)) throw InputError("node order is not a permutation of the node set");
  position_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) position_[sequence_[i]] = i;
}

NodeOrder NodeOrder::identity(std::size_t n) {
  std::vector<NodeId> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = i;
  return NodeOrder(std::move(seq), n);
}

Graph induced_subgraph(const Graph& g, std::vector<NodeId> subset) {
  for (auto v : subset) {
    if (v >= g.size()) throw InputError("induced subgraph: node index " + std::to_string(v) + " is not in the graph");
  }
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
    throw InputError("induced subgraph: repeated node");
  }
  std::vector<std::size_t> local(g.size(), g.size());
  std::vector<std::string> names;
  names.reserve(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    local[subset[i]] = i;
    names.push_back(g.name(subset[i]));
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& e : g.edges()) {
    if (local[e.u] < g.size() && local[e.v] < g.size()) edges.emplace_back(local[e.u], local[e.v]);
  }
  return Graph::from_indexed(std::move(names), edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& subset) {
  std::vector<NodeId> idx;
  idx.reserve(subset.size());
  for (const auto& s : subset) idx.push_back(g.index_of(s));
  return induced_subgraph(g, std::move(idx));
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::with_size(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle needs at least 3 nodes");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::with_size(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::with_size(n, edges);
}

Graph petersen_graph() {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph::with_size(10, edges);
}

}  // namespace incwb::graph
