#pragma once

#include <cstddef>
#include <cstdint>

#include "incwb/graph.hpp"
#include "incwb/relsys.hpp"
#include "incwb/rng.hpp"

namespace incwb {

/// G(n, p) with p = percent / 100; nodes "0".."n-1".
graph::Graph random_graph(std::size_t n, std::size_t percent, Rng& rng);

/// Each ordered pair of distinct elements lies in each R_zeta with
/// probability percent / 100; elements "e0".."e{n-1}".
relsys::RelationSystem random_system(std::size_t n, std::size_t kappa, std::size_t percent, Rng& rng);

}  // namespace incwb
