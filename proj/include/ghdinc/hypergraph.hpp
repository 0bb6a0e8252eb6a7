#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ghdinc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Bitsets indexed by the vertex (resp. edge) ids of one specific Hypergraph.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;
using EdgeSet = boost::dynamic_bitset<std::uint64_t>;

// Sorted, duplicate-free list of identifiers. Used wherever a set has to
// survive the trip between two different hypergraphs (H and a modified H).
using NameSet = std::vector<std::string>;

NameSet make_name_set(std::vector<std::string> names);
bool is_valid_identifier(std::string_view name);

struct EdgeSpec {
  std::string name;
  std::vector<std::string> vertices;
};

// Immutable hypergraph. Vertex ids follow first occurrence in edge order,
// edge ids follow insertion order. Every vertex lies in some edge.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Throws PreconditionError on an empty edge, a duplicate edge name, a
  // duplicate vertex inside one edge, or an identifier outside
  // [A-Za-z0-9_:.-]+.
  static Hypergraph from_edges(const std::vector<EdgeSpec>& edges);

  std::size_t num_vertices() const { return vertex_names_.size(); }
  std::size_t num_edges() const { return edge_names_.size(); }
  bool empty() const { return edge_names_.empty(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::string& edge_name(EdgeId e) const { return edge_names_[e]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<std::string>& edge_names() const { return edge_names_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  const VertexSet& edge(EdgeId e) const { return edge_bits_[e]; }
  // Vertices of an edge in the order they were listed.
  const std::vector<VertexId>& edge_vertices(EdgeId e) const { return edge_lists_[e]; }
  const std::vector<EdgeId>& incident_edges(VertexId v) const { return incidence_[v]; }
  std::size_t degree(VertexId v) const { return incidence_[v].size(); }

  // Source edge names an edge was derived from (itself unless produced by
  // induced_subhypergraph coalescing).
  const NameSet& provenance(EdgeId e) const { return provenance_[e]; }

  VertexSet no_vertices() const { return VertexSet(num_vertices()); }
  VertexSet all_vertices() const;
  EdgeSet no_edges() const { return EdgeSet(num_edges()); }
  EdgeSet all_edges() const;

  VertexSet vertex_set(const NameSet& names) const;  // throws on unknown names
  EdgeSet edge_set(const NameSet& names) const;      // throws on unknown names
  NameSet names_of(const VertexSet& vertices) const;
  NameSet edge_names_of(const EdgeSet& edges) const;

  std::vector<EdgeSpec> to_specs() const;

 private:
  friend Hypergraph induced_subhypergraph(const Hypergraph& h, const VertexSet& keep);

  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<std::vector<VertexId>> edge_lists_;
  std::vector<VertexSet> edge_bits_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<NameSet> provenance_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

// B(E): union of the member edges.
VertexSet cover_union(const Hypergraph& h, const EdgeSet& edges);
NameSet cover_union(const Hypergraph& h, const NameSet& edge_names);

// Vertices touched by a set of edges; same as cover_union, named for intent.
inline VertexSet vertices_of(const Hypergraph& h, const EdgeSet& edges) {
  return cover_union(h, edges);
}

// H[U]. Edges are trimmed to U, empty traces are dropped and identical traces
// are coalesced under the lexicographically smallest source name; the full
// list of source names is kept as provenance. Vertex ids follow U in the
// order of the source hypergraph.
Hypergraph induced_subhypergraph(const Hypergraph& h, const VertexSet& keep);

// The set of non-empty traces {e ∩ U}, as named vertex sets. Two induced
// subhypergraphs are structurally equal iff these sets are equal.
std::set<NameSet> induced_traces(const Hypergraph& h, const NameSet& keep);

// [U]-components of the edge set `within`: maximal classes of edges pairwise
// connected through vertices outside `separator`. Edges contained in the
// separator belong to no component. Ordered by smallest member edge name.
std::vector<EdgeSet> components(const Hypergraph& h, const EdgeSet& within,
                                const VertexSet& separator);

struct DegreeRankStats {
  std::size_t avg_degree_ceil;
  std::size_t avg_rank_ceil;
};

// Throws PreconditionError for an empty hypergraph.
DegreeRankStats degree_and_rank_stats(const Hypergraph& h);

// Text format: `%` comments, edges `NAME(v1,...,vk)` separated by commas
// and/or newlines, optional terminating `.`.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph_file(const std::string& path);

// One edge per line with a trailing comma, last line terminated by `.`.
std::string serialize_hypergraph(const Hypergraph& h);

}  // namespace ghdinc
