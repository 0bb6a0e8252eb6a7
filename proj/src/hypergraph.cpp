#include "ghdinc/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ghdinc/error.hpp"

namespace ghdinc {

NameSet make_name_set(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

bool is_valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == ':' || c == '.' || c == '-';
  });
}

Hypergraph Hypergraph::from_edges(const std::vector<EdgeSpec>& edges) {
  Hypergraph h;
  h.edge_names_.reserve(edges.size());
  for (const auto& spec : edges) {
    if (!is_valid_identifier(spec.name))
      throw PreconditionError("invalid edge name '" + spec.name + "'");
    if (spec.vertices.empty()) throw PreconditionError("edge '" + spec.name + "' is empty");
    auto [it, inserted] = h.edge_index_.emplace(spec.name, static_cast<EdgeId>(h.edge_names_.size()));
    if (!inserted) throw PreconditionError("duplicate edge name '" + spec.name + "'");
    h.edge_names_.push_back(spec.name);

    std::vector<VertexId> list;
    list.reserve(spec.vertices.size());
    for (const auto& v : spec.vertices) {
      if (!is_valid_identifier(v))
        throw PreconditionError("invalid vertex name '" + v + "' in edge '" + spec.name + "'");
      auto [vit, fresh] = h.vertex_index_.emplace(v, static_cast<VertexId>(h.vertex_names_.size()));
      if (fresh) h.vertex_names_.push_back(v);
      if (std::find(list.begin(), list.end(), vit->second) != list.end())
        throw PreconditionError("duplicate vertex '" + v + "' in edge '" + spec.name + "'");
      list.push_back(vit->second);
    }
    h.edge_lists_.push_back(std::move(list));
    h.provenance_.push_back({spec.name});
  }

  const std::size_t n = h.vertex_names_.size();
  h.incidence_.assign(n, {});
  h.edge_bits_.reserve(h.edge_lists_.size());
  for (EdgeId e = 0; e < h.edge_lists_.size(); ++e) {
    VertexSet bits(n);
    for (VertexId v : h.edge_lists_[e]) {
      bits.set(v);
      h.incidence_[v].push_back(e);
    }
    h.edge_bits_.push_back(std::move(bits));
  }
  return h;
}

std::optional<VertexId> Hypergraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Hypergraph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexSet Hypergraph::all_vertices() const {
  VertexSet s(num_vertices());
  s.set();
  return s;
}

EdgeSet Hypergraph::all_edges() const {
  EdgeSet s(num_edges());
  s.set();
  return s;
}

VertexSet Hypergraph::vertex_set(const NameSet& names) const {
  VertexSet s(num_vertices());
  for (const auto& n : names) {
    auto v = find_vertex(n);
    if (!v) throw PreconditionError("unknown vertex '" + n + "'");
    s.set(*v);
  }
  return s;
}

EdgeSet Hypergraph::edge_set(const NameSet& names) const {
  EdgeSet s(num_edges());
  for (const auto& n : names) {
    auto e = find_edge(n);
    if (!e) throw PreconditionError("unknown edge '" + n + "'");
    s.set(*e);
  }
  return s;
}

NameSet Hypergraph::names_of(const VertexSet& vertices) const {
  std::vector<std::string> out;
  for (auto v = vertices.find_first(); v != VertexSet::npos; v = vertices.find_next(v))
    out.push_back(vertex_names_[v]);
  std::sort(out.begin(), out.end());
  return out;
}

NameSet Hypergraph::edge_names_of(const EdgeSet& edges) const {
  std::vector<std::string> out;
  for (auto e = edges.find_first(); e != EdgeSet::npos; e = edges.find_next(e))
    out.push_back(edge_names_[e]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeSpec> Hypergraph::to_specs() const {
  std::vector<EdgeSpec> specs;
  specs.reserve(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) {
    EdgeSpec spec{edge_names_[e], {}};
    for (VertexId v : edge_lists_[e]) spec.vertices.push_back(vertex_names_[v]);
    specs.push_back(std::move(spec));
  }
  return specs;
}

VertexSet cover_union(const Hypergraph& h, const EdgeSet& edges) {
  VertexSet out = h.no_vertices();
  for (auto e = edges.find_first(); e != EdgeSet::npos; e = edges.find_next(e)) out |= h.edge(e);
  return out;
}

NameSet cover_union(const Hypergraph& h, const NameSet& edge_names) {
  return h.names_of(cover_union(h, h.edge_set(edge_names)));
}

Hypergraph induced_subhypergraph(const Hypergraph& h, const VertexSet& keep) {
  // trace -> index into specs; traces compared as bitsets over h's vertices
  std::map<VertexSet, std::size_t> seen;
  std::vector<EdgeSpec> specs;
  std::vector<std::vector<std::string>> sources;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    VertexSet trace = h.edge(e) & keep;
    if (trace.none()) continue;
    auto it = seen.find(trace);
    if (it == seen.end()) {
      EdgeSpec spec{h.edge_name(e), {}};
      for (VertexId v : h.edge_vertices(e))
        if (keep.test(v)) spec.vertices.push_back(h.vertex_name(v));
      seen.emplace(std::move(trace), specs.size());
      specs.push_back(std::move(spec));
      sources.push_back({h.edge_name(e)});
    } else {
      auto& spec = specs[it->second];
      if (h.edge_name(e) < spec.name) spec.name = h.edge_name(e);
      sources[it->second].push_back(h.edge_name(e));
    }
  }
  Hypergraph out = Hypergraph::from_edges(specs);
  for (std::size_t i = 0; i < sources.size(); ++i)
    out.provenance_[i] = make_name_set(std::move(sources[i]));
  return out;
}

std::set<NameSet> induced_traces(const Hypergraph& h, const NameSet& keep) {
  VertexSet keep_bits = h.no_vertices();
  for (const auto& name : keep)
    if (auto v = h.find_vertex(name)) keep_bits.set(*v);
  std::set<NameSet> traces;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    VertexSet trace = h.edge(e) & keep_bits;
    if (trace.any()) traces.insert(h.names_of(trace));
  }
  return traces;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<EdgeSet> components(const Hypergraph& h, const EdgeSet& within,
                                const VertexSet& separator) {
  const std::size_t m = h.num_edges();
  DisjointSets sets(m);
  VertexSet open = cover_union(h, within) - separator;
  for (auto v = open.find_first(); v != VertexSet::npos; v = open.find_next(v)) {
    std::optional<EdgeId> first;
    for (EdgeId e : h.incident_edges(static_cast<VertexId>(v))) {
      if (!within.test(e)) continue;
      if (first)
        sets.unite(*first, e);
      else
        first = e;
    }
  }

  std::map<std::size_t, EdgeSet> by_root;
  for (auto e = within.find_first(); e != EdgeSet::npos; e = within.find_next(e)) {
    if (h.edge(e).is_subset_of(separator)) continue;
    auto [it, fresh] = by_root.try_emplace(sets.find(e), m);
    it->second.set(e);
  }

  std::vector<std::pair<std::string, EdgeSet>> keyed;
  keyed.reserve(by_root.size());
  for (auto& [root, comp] : by_root) {
    const std::string* smallest = nullptr;
    for (auto e = comp.find_first(); e != EdgeSet::npos; e = comp.find_next(e))
      if (!smallest || h.edge_name(e) < *smallest) smallest = &h.edge_name(e);
    keyed.emplace_back(*smallest, std::move(comp));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<EdgeSet> out;
  out.reserve(keyed.size());
  for (auto& entry : keyed) out.push_back(std::move(entry.second));
  return out;
}

DegreeRankStats degree_and_rank_stats(const Hypergraph& h) {
  if (h.empty()) throw PreconditionError("degree and rank statistics need a non-empty hypergraph");
  std::size_t pins = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) pins += h.edge_vertices(e).size();
  // Σ deg(v) and Σ |e| both count incidences.
  auto ceil_div = [](std::size_t a, std::size_t b) { return (a + b - 1) / b; };
  return {ceil_div(pins, h.num_vertices()), ceil_div(pins, h.num_edges())};
}

}  // namespace ghdinc
