#include "ghdinc/mutable_subtree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "ghdinc/error.hpp"

namespace ghdinc {

bool MutableSubtree::contains(const std::string& id) const {
  return std::find(node_ids.begin(), node_ids.end(), id) != node_ids.end();
}

namespace {

std::vector<bool> membership(const FlatGhd& flat, const std::vector<std::string>& ids) {
  std::vector<bool> in(flat.size(), false);
  for (const auto& id : ids)
    if (auto i = flat.index_of(id)) in[*i] = true;
  return in;
}

NameSet bag_union(const FlatGhd& flat, const std::vector<bool>& in, bool wanted) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < flat.size(); ++i)
    if (in[i] == wanted) out.insert(flat.node(i).bag.begin(), flat.node(i).bag.end());
  return {out.begin(), out.end()};
}

NameSet trace(const Hypergraph& h, EdgeId e, const std::set<std::string>& keep);

bool holds(const FlatGhd& flat, const std::vector<bool>& in, const Hypergraph& h, const Hypergraph& dh,
           const EdgeCorrespondence& s) {
  const NameSet outer = bag_union(flat, in, false);
  const std::set<std::string> outer_set(outer.begin(), outer.end());
  std::vector<bool> image(dh.num_edges(), false);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const NameSet before = trace(h, e, outer_set);
    auto it = s.find(h.edge_name(e));
    std::optional<EdgeId> to;
    if (it != s.end() && it->second) to = dh.find_edge(*it->second);
    if (!to) {
      if (!before.empty()) return false;
      continue;
    }
    image[*to] = true;
    if (before != trace(dh, *to, outer_set)) return false;
  }
  for (EdgeId e = 0; e < dh.num_edges(); ++e)
    if (!image[e] && !trace(dh, e, outer_set).empty()) return false;
  for (EdgeId e = 0; e < dh.num_edges(); ++e) {
    bool has_new = false, touches_outer = false;
    for (VertexId v : dh.edge_vertices(e)) {
      const auto& name = dh.vertex_name(v);
      if (!h.find_vertex(name)) has_new = true;
      if (outer_set.count(name)) touches_outer = true;
    }
    if (has_new && touches_outer) return false;
  }
  return true;
}

std::set<std::string> as_set(const NameSet& names) { return {names.begin(), names.end()}; }

bool subset_of(const NameSet& a, const NameSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

NameSet trace(const Hypergraph& h, EdgeId e, const std::set<std::string>& keep) {
  std::vector<std::string> out;
  for (VertexId v : h.edge_vertices(e))
    if (keep.count(h.vertex_name(v))) out.push_back(h.vertex_name(v));
  return make_name_set(std::move(out));
}

// Removes nodes whose cover ended up empty, lifting their children.
std::vector<GhdNode> splice_empty(GhdNode n) {
  std::vector<GhdNode> kids;
  for (auto& c : n.children)
    for (auto& x : splice_empty(std::move(c))) kids.push_back(std::move(x));
  n.children = std::move(kids);
  if (n.cover.empty()) return std::move(n.children);
  return {std::move(n)};
}

Ghd from_forest(std::vector<GhdNode> forest) {
  if (forest.empty()) throw PreconditionError("no decomposition nodes left");
  GhdNode root = std::move(forest.front());
  for (std::size_t i = 1; i < forest.size(); ++i) root.children.push_back(std::move(forest[i]));
  return Ghd(std::move(root));
}

GhdNode* find_first(GhdNode& n, const NameSet& required) {
  if (subset_of(required, n.bag)) return &n;
  for (auto& c : n.children)
    if (auto* hit = find_first(c, required)) return hit;
  return nullptr;
}

}  // namespace

bool satisfies_mutable_conditions(const Ghd& g, const Hypergraph& h, const Hypergraph& dh,
                                  const EdgeCorrespondence& s, const std::vector<std::string>& node_ids) {
  FlatGhd flat(g);
  return holds(flat, membership(flat, node_ids), h, dh, s);
}

bool is_connected_node_set(const Ghd& g, const std::vector<std::string>& node_ids) {
  FlatGhd flat(g);
  auto in = membership(flat, node_ids);
  // A set of tree nodes is connected iff exactly one member has its parent
  // outside the set.
  std::size_t tops = 0;
  for (std::size_t i = 0; i < flat.size(); ++i)
    if (in[i] && (flat.parent(i) < 0 || !in[static_cast<std::size_t>(flat.parent(i))])) ++tops;
  return tops <= 1;
}

MutableSubtree minimal_mutable_subtree(const Ghd& g, const Hypergraph& h, const Hypergraph& dh,
                                       const EdgeCorrespondence& s) {
  FlatGhd flat(g);
  std::vector<bool> in(flat.size(), true);
  const auto order = flat.postorder();
  auto degree_inside = [&](std::size_t i) {
    std::size_t d = 0;
    for (std::size_t j : flat.neighbours(i)) d += in[j];
    return d;
  };
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t i : order) {
      if (!in[i] || degree_inside(i) > 1) continue;
      in[i] = false;
      if (holds(flat, in, h, dh, s)) {
        removed = true;
        break;
      }
      in[i] = true;
    }
  }
  MutableSubtree t;
  for (std::size_t i = 0; i < flat.size(); ++i)
    if (in[i]) t.node_ids.push_back(flat.node(i).id);
  return t;
}

std::vector<BagConstraint> induced_bag_constraints(const Ghd& g, const MutableSubtree& t) {
  FlatGhd flat(g);
  auto in = membership(flat, t.node_ids);
  const auto inner = as_set(bag_union(flat, in, true));
  std::vector<BagConstraint> out;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (in[i]) continue;
    const auto nb = flat.neighbours(i);
    if (std::none_of(nb.begin(), nb.end(), [&](std::size_t j) { return in[j]; })) continue;
    std::vector<std::string> c;
    for (const auto& v : flat.node(i).bag)
      if (inner.count(v)) c.push_back(v);
    out.push_back({make_name_set(std::move(c)), flat.node(i).id});
  }
  std::sort(out.begin(), out.end(),
            [](const BagConstraint& a, const BagConstraint& b) { return a.anchor_node < b.anchor_node; });
  return out;
}

bool check_bag_constraints(const Ghd& g, const std::vector<BagConstraint>& constraints) {
  FlatGhd flat(g);
  for (const auto& c : constraints) {
    bool found = false;
    for (std::size_t i = 0; i < flat.size() && !found; ++i)
      found = subset_of(c.required_vertices, flat.node(i).bag);
    if (!found) return false;
  }
  return true;
}

Hypergraph delta_star(const Ghd& g, const Hypergraph& h, const Hypergraph& dh,
                      const MutableSubtree& t) {
  FlatGhd flat(g);
  const auto inner = as_set(bag_union(flat, membership(flat, t.node_ids), true));
  VertexSet keep = dh.no_vertices();
  for (VertexId v = 0; v < dh.num_vertices(); ++v)
    if (inner.count(dh.vertex_name(v)) || !h.find_vertex(dh.vertex_name(v))) keep.set(v);
  return induced_subhypergraph(dh, keep);
}

std::vector<Ghd> outer_trees(const Ghd& g, const MutableSubtree& t) {
  FlatGhd flat(g);
  auto in = membership(flat, t.node_ids);
  std::vector<std::size_t> anchors;
  if (t.empty()) {
    anchors.push_back(0);
  } else {
    for (std::size_t i = 0; i < flat.size(); ++i) {
      if (in[i]) continue;
      const auto nb = flat.neighbours(i);
      if (std::any_of(nb.begin(), nb.end(), [&](std::size_t j) { return in[j]; })) anchors.push_back(i);
    }
  }
  std::function<GhdNode(std::size_t, std::size_t)> grow = [&](std::size_t i, std::size_t from) {
    GhdNode n{flat.node(i).id, flat.node(i).bag, flat.node(i).cover, {}};
    auto nb = flat.neighbours(i);
    std::sort(nb.begin(), nb.end());
    for (std::size_t j : nb)
      if (j != from && !in[j]) n.children.push_back(grow(j, i));
    return n;
  };
  std::vector<Ghd> out;
  for (std::size_t a : anchors) out.emplace_back(grow(a, flat.size()));
  std::sort(out.begin(), out.end(),
            [](const Ghd& a, const Ghd& b) { return a.root().id < b.root().id; });
  return out;
}

Ghd restrict_outer_tree(const Ghd& outer, const Hypergraph& h, const Hypergraph& dh) {
  FlatGhd flat(outer);
  const auto keep = as_set(bag_union(flat, std::vector<bool>(flat.size(), true), true));
  VertexSet keep_bits = dh.no_vertices();
  for (VertexId v = 0; v < dh.num_vertices(); ++v)
    if (keep.count(dh.vertex_name(v))) keep_bits.set(v);
  const Hypergraph induced = induced_subhypergraph(dh, keep_bits);
  std::map<NameSet, std::string> by_trace;
  for (EdgeId e = 0; e < induced.num_edges(); ++e)
    by_trace.emplace(induced.names_of(induced.edge(e)), induced.edge_name(e));

  std::function<GhdNode(const GhdNode&)> rewrite = [&](const GhdNode& n) {
    GhdNode out{n.id, n.bag, {}, {}};
    std::vector<std::string> cover;
    for (const auto& name : n.cover) {
      auto e = h.find_edge(name);
      if (!e) throw PreconditionError("unknown cover edge '" + name + "'");
      NameSet t = trace(h, *e, keep);
      if (t.empty()) continue;
      auto it = by_trace.find(t);
      if (it == by_trace.end())
        throw PreconditionError("trace of edge '" + name + "' is missing from the modified hypergraph");
      cover.push_back(it->second);
    }
    out.cover = make_name_set(std::move(cover));
    for (const auto& c : n.children) out.children.push_back(rewrite(c));
    return out;
  };
  return from_forest(splice_empty(rewrite(outer.root())));
}

Ghd attach_outer_trees(const Ghd& gstar, const Ghd& g, const MutableSubtree& t,
                       const std::vector<BagConstraint>& constraints, const Hypergraph& h,
                       const Hypergraph& dh, const EdgeCorrespondence& s) {
  FlatGhd flat(g);
  auto in = membership(flat, t.node_ids);
  const auto outer_bags = as_set(bag_union(flat, in, false));

  std::map<NameSet, std::vector<EdgeId>> dh_by_trace;
  for (EdgeId e = 0; e < dh.num_edges(); ++e) {
    NameSet tr = trace(dh, e, outer_bags);
    if (!tr.empty()) dh_by_trace[tr].push_back(e);
  }
  auto translate = [&](const std::string& name) -> std::optional<std::string> {
    auto e = h.find_edge(name);
    if (!e) throw PreconditionError("unknown cover edge '" + name + "'");
    NameSet tr = trace(h, *e, outer_bags);
    if (tr.empty()) return std::nullopt;
    auto it = dh_by_trace.find(tr);
    if (it == dh_by_trace.end())
      throw PreconditionError("edge '" + name + "' has no counterpart outside the mutable subtree");
    if (auto succ = s.find(name); succ != s.end() && succ->second) {
      auto se = dh.find_edge(*succ->second);
      if (se && std::find(it->second.begin(), it->second.end(), *se) != it->second.end())
        return *succ->second;
    }
    return dh.edge_name(it->second.front());
  };
  std::function<GhdNode(const GhdNode&)> rewrite = [&](const GhdNode& n) {
    GhdNode out{n.id, n.bag, {}, {}};
    std::vector<std::string> cover;
    for (const auto& name : n.cover)
      if (auto x = translate(name)) cover.push_back(*x);
    out.cover = make_name_set(std::move(cover));
    for (const auto& c : n.children) out.children.push_back(rewrite(c));
    return out;
  };

  auto outers = outer_trees(g, t);
  Ghd result;
  if (t.empty()) {
    result = from_forest(splice_empty(rewrite(outers.front().root())));
  } else {
    result = gstar;
    for (const auto& o : outers) {
      auto c = std::find_if(constraints.begin(), constraints.end(),
                            [&](const BagConstraint& b) { return b.anchor_node == o.root().id; });
      if (c == constraints.end())
        throw PreconditionError("no bag constraint for outer node '" + o.root().id + "'");
      GhdNode* host = find_first(result.root(), c->required_vertices);
      if (!host)
        throw PreconditionError("bag constraint of outer node '" + o.root().id + "' is not satisfied");
      for (auto& piece : splice_empty(rewrite(o.root()))) host->children.push_back(std::move(piece));
    }
  }
  renumber(result);
  return result;
}

std::string explain_json(const MutableSubtree& t, const std::vector<BagConstraint>& constraints,
                         int indent) {
  nlohmann::json j;
  j["mutable"] = t.node_ids;
  j["constraints"] = nlohmann::json::array();
  for (const auto& c : constraints)
    j["constraints"].push_back({{"vertices", c.required_vertices}, {"anchor", c.anchor_node}});
  return j.dump(indent);
}

}  // namespace ghdinc
