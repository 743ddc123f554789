#include "incwb/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "incwb/common.hpp"

namespace incwb::matching {

namespace {
constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
}  // namespace

BipartiteMatcher::BipartiteMatcher(std::size_t left, std::size_t right)
    : adjacency_(left), mate_left_(left, kFree), mate_right_(right, kFree), layer_(left, kInf) {}

void BipartiteMatcher::add_edge(std::size_t l, std::size_t r) {
  if (l >= adjacency_.size() || r >= mate_right_.size()) throw InputError("matching edge out of range");
  adjacency_[l].push_back(r);
}

bool BipartiteMatcher::bfs() {
  std::queue<std::size_t> queue;
  for (std::size_t l = 0; l < adjacency_.size(); ++l) {
    if (mate_left_[l] == kFree) {
      layer_[l] = 0;
      queue.push(l);
    } else {
      layer_[l] = kInf;
    }
  }
  bool reachable_free = false;
  while (!queue.empty()) {
    const std::size_t l = queue.front();
    queue.pop();
    for (std::size_t r : adjacency_[l]) {
      const std::size_t next = mate_right_[r];
      if (next == kFree) {
        reachable_free = true;
      } else if (layer_[next] == kInf) {
        layer_[next] = layer_[l] + 1;
        queue.push(next);
      }
    }
  }
  return reachable_free;
}

bool BipartiteMatcher::dfs(std::size_t l) {
  for (std::size_t r : adjacency_[l]) {
    const std::size_t next = mate_right_[r];
    if (next == kFree || (layer_[next] == layer_[l] + 1 && dfs(next))) {
      mate_left_[l] = r;
      mate_right_[r] = l;
      return true;
    }
  }
  layer_[l] = kInf;
  return false;
}

std::size_t BipartiteMatcher::solve() {
  std::fill(mate_left_.begin(), mate_left_.end(), kFree);
  std::fill(mate_right_.begin(), mate_right_.end(), kFree);
  std::size_t size = 0;
  while (bfs()) {
    for (std::size_t l = 0; l < adjacency_.size(); ++l) {
      if (mate_left_[l] == kFree && dfs(l)) ++size;
    }
  }
  return size;
}

std::optional<std::size_t> BipartiteMatcher::mate_of_left(std::size_t l) const {
  if (mate_left_.at(l) == kFree) return std::nullopt;
  return mate_left_[l];
}

std::optional<std::size_t> BipartiteMatcher::mate_of_right(std::size_t r) const {
  if (mate_right_.at(r) == kFree) return std::nullopt;
  return mate_right_[r];
}

std::vector<std::size_t> BipartiteMatcher::hall_violator() const {
  auto start = std::find(mate_left_.begin(), mate_left_.end(), kFree);
  if (start == mate_left_.end()) return {};
  std::vector<bool> seen_left(adjacency_.size(), false);
  std::vector<bool> seen_right(mate_right_.size(), false);
  std::queue<std::size_t> queue;
  const auto root = static_cast<std::size_t>(start - mate_left_.begin());
  seen_left[root] = true;
  queue.push(root);
  while (!queue.empty()) {
    const std::size_t l = queue.front();
    queue.pop();
    for (std::size_t r : adjacency_[l]) {
      if (seen_right[r]) continue;
      seen_right[r] = true;
      // Maximality guarantees every reached right vertex is matched.
      const std::size_t next = mate_right_[r];
      if (next != kFree && !seen_left[next]) {
        seen_left[next] = true;
        queue.push(next);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < seen_left.size(); ++l)
    if (seen_left[l]) out.push_back(l);
  return out;
}

}  // namespace incwb::matching
