#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace incwb::matching {

/// Maximum bipartite matching by Hopcroft-Karp. Left vertices are scanned
/// in index order and their edges in insertion order, so results are
/// reproducible.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t left, std::size_t right);

  void add_edge(std::size_t l, std::size_t r);

  /// Computes a maximum matching and returns its size.
  std::size_t solve();

  std::size_t left_size() const { return adjacency_.size(); }
  std::size_t right_size() const { return mate_right_.size(); }
  std::optional<std::size_t> mate_of_left(std::size_t l) const;
  std::optional<std::size_t> mate_of_right(std::size_t r) const;

  /// After solve(): if some left vertex is unmatched, the set S of left
  /// vertices reachable from the least unmatched one by alternating paths.
  /// Its neighbourhood has exactly |S| - 1 vertices (a Hall violation).
  /// Empty when the matching saturates the left side.
  std::vector<std::size_t> hall_violator() const;

 private:
  bool bfs();
  bool dfs(std::size_t l);

  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> mate_left_;
  std::vector<std::size_t> mate_right_;
  std::vector<std::size_t> layer_;
};

}  // namespace incwb::matching
