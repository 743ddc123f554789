#include "incwb/random.hpp"

#include <string>
#include <utility>
#include <vector>

namespace incwb {

graph::Graph random_graph(std::size_t n, std::size_t percent, Rng& rng) {
  if (percent > 100) throw InputError("edge percentage above 100");
  std::vector<std::pair<graph::NodeId, graph::NodeId>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.chance(percent, 100)) edges.emplace_back(u, v);
  return graph::Graph::with_size(n, edges);
}

relsys::RelationSystem random_system(std::size_t n, std::size_t kappa, std::size_t percent, Rng& rng) {
  if (percent > 100) throw InputError("relation density above 100");
  std::vector<std::string> ground;
  for (std::size_t i = 0; i < n; ++i) ground.push_back("e" + std::to_string(i));
  std::vector<std::vector<relsys::Pair>> rel(kappa);
  for (std::size_t z = 0; z < kappa; ++z)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && rng.chance(percent, 100)) rel[z].emplace_back(a, b);
  return relsys::RelationSystem(std::move(ground), kappa, std::move(rel));
}

}  // namespace incwb
