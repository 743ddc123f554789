#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "incwb/famfun.hpp"
#include "incwb/graph.hpp"
#include "incwb/relsys.hpp"

// Brute-force reference implementations. They enumerate the definitions
// directly and share no search code with the library.
namespace oracle {

/// Least number of colours over all restricted-growth assignments.
std::size_t chromatic(const incwb::graph::Graph& g);

/// min over all node orders of (max earlier neighbours) + 1; 0 when empty.
std::size_t colouring_number(const incwb::graph::Graph& g);

/// Some choice function on the ranges is one-to-one.
bool has_transversal(const std::vector<std::vector<std::size_t>>& ranges);

/// Exists an order and a colour map into `colours` satisfying the witness
/// clauses; `order_clause` false drops the same-colour ordering clause.
bool is_free(const incwb::relsys::RelationSystem& sys, const incwb::relsys::Subset& b, std::size_t colours,
             bool order_clause = true);
/// Every order admits a colour map.
bool is_strongly_free(const incwb::relsys::RelationSystem& sys, const incwb::relsys::Subset& b, std::size_t colours,
                      bool order_clause = true);
/// A colour map with every order-free exception set below kappa.
bool is_weakly_free(const incwb::relsys::RelationSystem& sys, const incwb::relsys::Subset& b, std::size_t colours);

/// Checks (order, h) against the definition; h indexed like b.
bool witness_ok(const incwb::relsys::RelationSystem& sys, const std::vector<std::size_t>& order,
                const std::vector<std::size_t>& colour_of, bool order_clause);

/// exp(eta) straight from the definition, as a sorted list of indices.
std::vector<std::size_t> exp_indices(const incwb::relsys::RelationSystem& sys, const incwb::relsys::Subset& b,
                                     incwb::relsys::ElementId eta, const incwb::relsys::FreenessWitness& w);

/// Every labelled graph on n nodes ("0".."n-1").
std::vector<incwb::graph::Graph> all_graphs(std::size_t n);

}  // namespace oracle
