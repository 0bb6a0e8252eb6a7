#include "ghdinc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "ghdinc/error.hpp"

namespace ghdinc {

std::size_t ghw_oracle(const Hypergraph& h) {
  if (h.empty()) throw PreconditionError("ghw of an empty hypergraph is undefined");
  if (h.num_edges() > kOracleMaxEdges || h.num_vertices() > kOracleMaxVertices)
    throw PreconditionError("instance too large for the exact oracle (" +
                            std::to_string(h.num_edges()) + " edges, " +
                            std::to_string(h.num_vertices()) + " vertices)");
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  const std::uint32_t full = (1u << n) - 1;

  std::vector<std::uint32_t> edge_mask(m, 0);
  std::vector<std::uint32_t> adjacent(n, 0);
  for (EdgeId e = 0; e < m; ++e) {
    for (VertexId v : h.edge_vertices(e)) edge_mask[e] |= 1u << v;
    for (VertexId v : h.edge_vertices(e)) adjacent[v] |= edge_mask[e] & ~(1u << v);
  }

  // rho[S] = fewest edges whose union contains S.
  constexpr std::uint8_t kInf = std::numeric_limits<std::uint8_t>::max();
  std::vector<std::uint8_t> rho(std::size_t{1} << n, kInf);
  for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
    std::uint32_t covered = 0;
    for (std::size_t e = 0; e < m; ++e)
      if (subset & (1u << e)) covered |= edge_mask[e];
    rho[covered] = std::min<std::uint8_t>(rho[covered], static_cast<std::uint8_t>(std::popcount(subset)));
  }
  for (std::size_t b = 0; b < n; ++b)
    for (std::uint32_t s = 0; s <= full; ++s)
      if (s & (1u << b)) rho[s ^ (1u << b)] = std::min(rho[s ^ (1u << b)], rho[s]);

  // Vertices outside eliminated ∪ {v} reachable from v through eliminated ones.
  auto clique_of = [&](std::uint32_t eliminated, std::size_t v) {
    std::uint32_t seen = 1u << v, frontier = 1u << v, clique = 1u << v;
    while (frontier) {
      std::size_t x = static_cast<std::size_t>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      std::uint32_t fresh = adjacent[x] & ~seen;
      seen |= fresh;
      clique |= fresh & ~eliminated;
      frontier |= fresh & eliminated;
    }
    return clique;
  };

  std::vector<std::uint8_t> best(std::size_t{1} << n, kInf);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      std::size_t v = static_cast<std::size_t>(std::countr_zero(rest));
      std::uint32_t before = s ^ (1u << v);
      std::uint8_t cost = std::max(best[before], rho[clique_of(before, v)]);
      best[s] = std::min(best[s], cost);
    }
  }
  return best[full];
}

}  // namespace ghdinc
