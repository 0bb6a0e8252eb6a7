#pragma once

#include <cstddef>

#include "ghdinc/hypergraph.hpp"

namespace ghdinc {

inline constexpr std::size_t kOracleMaxEdges = 10;
inline constexpr std::size_t kOracleMaxVertices = 18;

// Exact generalized hypertree width of a small hypergraph. Independent of
// the top-down search: minimises, over all elimination orderings of the
// primal graph, the largest edge-cover number of an elimination clique.
// Throws PreconditionError for empty or oversized instances.
std::size_t ghw_oracle(const Hypergraph& h);

}  // namespace ghdinc
