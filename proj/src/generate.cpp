#include <algorithm>
#include <random>
#include <set>

#include "ghdinc/error.hpp"
#include "ghdinc/modification.hpp"

namespace ghdinc {

namespace {

// Uniform index in [0, n).
std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

template <typename T>
std::vector<T> sample(std::vector<T> pool, std::size_t count, std::mt19937_64& rng) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(count, pool.size()));
  return pool;
}

std::string fresh(const std::string& prefix, std::uint64_t seed) {
  return prefix + std::to_string(seed);
}

}  // namespace

Modification generate(ModClass c, const Hypergraph& h, std::uint64_t seed) {
  if (h.empty()) throw PreconditionError("cannot generate a modification of an empty hypergraph");
  std::mt19937_64 rng(seed);
  const auto stats = degree_and_rank_stats(h);
  const std::string vname = fresh("_v", seed);
  const std::string ename = fresh("_e", seed);

  switch (c) {
    case ModClass::AddVar: {
      if (h.find_vertex(vname)) throw PreconditionError("fresh vertex name '" + vname + "' is taken");
      auto edges = sample(h.edge_names(), stats.avg_degree_ceil, rng);
      return AddVar{vname, make_name_set(std::move(edges))};
    }
    case ModClass::DelVar:
      return DelVar{h.vertex_name(static_cast<VertexId>(pick(rng, h.num_vertices())))};
    case ModClass::AddConstr: {
      if (h.find_edge(ename)) throw PreconditionError("fresh edge name '" + ename + "' is taken");
      const std::size_t rank = std::min(stats.avg_rank_ceil, h.num_vertices());
      std::set<NameSet> existing;
      for (EdgeId e = 0; e < h.num_edges(); ++e) existing.insert(h.names_of(h.edge(e)));
      // Retry until the drawn scope is new; give up once it is clear that
      // every scope of this rank is already an edge.
      for (int attempt = 0; attempt < 256; ++attempt) {
        auto vs = make_name_set(sample(h.vertex_names(), rank, rng));
        if (!existing.count(vs)) return AddConstr{ename, std::move(vs)};
      }
      throw PreconditionError("AddConstr: no new edge of rank " + std::to_string(rank) + " found");
    }
    case ModClass::DelConstr:
      if (h.num_edges() < 2) throw PreconditionError("DelConstr would leave an empty hypergraph");
      return DelConstr{h.edge_name(static_cast<EdgeId>(pick(rng, h.num_edges())))};
    case ModClass::AddEq: {
      if (h.num_vertices() < 2) throw PreconditionError("AddEq needs two vertices");
      auto pair = sample(h.vertex_names(), 2, rng);
      std::string into = pair[pick(rng, 2)];
      return AddEq{make_name_set(std::move(pair)), std::move(into)};
    }
    case ModClass::DelEq: {
      std::vector<VertexId> candidates;
      for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (h.degree(v) >= 2) candidates.push_back(v);
      if (candidates.empty()) throw PreconditionError("DelEq needs a vertex of degree >= 2");
      if (h.find_vertex(vname)) throw PreconditionError("fresh vertex name '" + vname + "' is taken");
      const VertexId x = candidates[pick(rng, candidates.size())];
      std::vector<std::string> incident;
      for (EdgeId e : h.incident_edges(x)) incident.push_back(h.edge_name(e));
      std::shuffle(incident.begin(), incident.end(), rng);
      const std::size_t half = (incident.size() + 1) / 2;
      std::vector<std::string> first(incident.begin(), incident.begin() + half);
      std::vector<std::string> second(incident.begin() + half, incident.end());
      return DelEq{h.vertex_name(x),
                   {{h.vertex_name(x), make_name_set(std::move(first))},
                    {vname, make_name_set(std::move(second))}}};
    }
  }
  throw PreconditionError("unknown modification class");
}

}  // namespace ghdinc
