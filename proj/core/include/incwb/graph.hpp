#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace incwb::graph {

using NodeId = std::size_t;

/// Undirected edge in canonical orientation (u < v by node index).
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph. Node indices follow declaration order;
/// every algorithm in this library breaks ties by node index.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from named nodes and named edges. Rejects self-loops,
  /// unknown endpoints and duplicate node names; duplicate edges collapse.
  Graph(std::vector<std::string> nodes, const std::vector<std::pair<std::string, std::string>>& edges);

  /// Same, with edges given by node index.
  static Graph from_indexed(std::vector<std::string> nodes, const std::vector<std::pair<NodeId, NodeId>>& edges);

  /// Nodes named "0", "1", ..., "n-1".
  static Graph with_size(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges);

  std::size_t size() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return names_.empty(); }

  const std::string& name(NodeId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<NodeId> find(std::string_view name) const;
  /// Throws InputError for unknown names.
  NodeId index_of(std::string_view name) const;

  /// Sorted neighbour list.
  std::span<const NodeId> neighbours(NodeId v) const { return adjacency_.at(v); }
  std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }
  bool adjacent(NodeId u, NodeId v) const;
  /// Sorted, canonical edge list.
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.names_ == b.names_ && a.edges_ == b.edges_; }

 private:
  void build(const std::vector<std::pair<NodeId, NodeId>>& edges);

  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<Edge> edges_;
};

/// Node colouring, indexed by node. Properness is always derived.
struct Colouring {
  std::vector<std::size_t> colour;

  std::size_t size() const { return colour.size(); }
  /// Number of distinct colour values.
  std::size_t colours_used() const;
  /// One more than the largest colour (0 when empty).
  std::size_t colour_bound() const;
};

/// A permutation of a graph's node indices.
class NodeOrder {
 public:
  NodeOrder() = default;
  /// Throws InputError unless `sequence` is a permutation of {0..n-1}.
  NodeOrder(std::vector<NodeId> sequence, std::size_t n);
  static NodeOrder identity(std::size_t n);

  std::size_t size() const { return sequence_.size(); }
  const std::vector<NodeId>& sequence() const { return sequence_; }
  NodeId operator[](std::size_t i) const { return sequence_[i]; }
  /// Position of node v in the order.
  std::size_t position(NodeId v) const { return position_.at(v); }

 private:
  std::vector<NodeId> sequence_;
  std::vector<std::size_t> position_;
};

/// Subgraph induced on `subset` (node indices of g). Names are kept and
/// nodes appear in g's index order. Throws InputError for indices not in g.
Graph induced_subgraph(const Graph& g, std::vector<NodeId> subset);
Graph induced_subgraph(const Graph& g, const std::vector<std::string>& subset);

/// Named test graphs.
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Outer 5-cycle on nodes 0..4, inner pentagram on 5..9, spokes i -- i+5.
Graph petersen_graph();

}  // namespace incwb::graph
