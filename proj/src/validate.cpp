#include <functional>
#include <unordered_set>

#include "ghdinc/ghd.hpp"

namespace ghdinc {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Structural: return "structural";
    case ViolationKind::EdgeCoverage: return "condition (1)";
    case ViolationKind::Connectedness: return "condition (2)";
    case ViolationKind::BagInCover: return "condition (3)";
    case ViolationKind::Width: return "width";
  }
  return "unknown";
}

namespace {

std::string brace(const NameSet& names) {
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
  return s + "}";
}

}  // namespace

std::vector<Violation> validate(const Hypergraph& h, const Ghd& g, std::size_t k) {
  std::vector<Violation> out;
  FlatGhd flat(g);
  const std::size_t n = flat.size();

  std::unordered_set<std::string> ids;
  std::vector<VertexSet> bags(n, h.no_vertices());
  for (std::size_t i = 0; i < n; ++i) {
    const GhdNode& node = flat.node(i);
    if (!ids.insert(node.id).second)
      out.push_back({ViolationKind::Structural, node.id, "duplicate node id '" + node.id + "'"});
    if (node.cover.empty())
      out.push_back({ViolationKind::Structural, node.id, "node '" + node.id + "' has an empty cover"});

    VertexSet covered = h.no_vertices();
    for (const auto& e : node.cover) {
      if (auto id = h.find_edge(e))
        covered |= h.edge(*id);
      else
        out.push_back({ViolationKind::Structural, e,
                       "node '" + node.id + "' covers with unknown edge '" + e + "'"});
    }
    for (const auto& v : node.bag) {
      auto id = h.find_vertex(v);
      if (!id) {
        out.push_back({ViolationKind::Structural, v,
                       "node '" + node.id + "' has unknown vertex '" + v + "' in its bag"});
        continue;
      }
      bags[i].set(*id);
      if (!covered.test(*id))
        out.push_back({ViolationKind::BagInCover, node.id,
                       "condition (3): vertex " + v + " of node " + node.id +
                           " is not covered by " + brace(node.cover)});
    }
  }

  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) found = h.edge(e).is_subset_of(bags[i]);
    if (!found)
      out.push_back({ViolationKind::EdgeCoverage, h.edge_name(e),
                     "condition (1): edge " + h.edge_name(e) + " = " + brace(h.names_of(h.edge(e))) +
                         " is not contained in any bag"});
  }

  // A vertex's nodes form a connected subtree iff #nodes - #tree edges inside = 1.
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    std::size_t nodes = 0, links = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!bags[i].test(v)) continue;
      ++nodes;
      if (flat.parent(i) >= 0 && bags[static_cast<std::size_t>(flat.parent(i))].test(v)) ++links;
    }
    if (nodes > 0 && nodes != links + 1)
      out.push_back({ViolationKind::Connectedness, h.vertex_name(v),
                     "condition (2): nodes containing vertex " + h.vertex_name(v) +
                         " do not form a connected subtree"});
  }

  if (g.width() > k)
    out.push_back({ViolationKind::Width, g.root().id,
                   "width " + std::to_string(g.width()) + " exceeds bound " + std::to_string(k)});
  return out;
}

namespace {

bool augment(std::size_t comp, const std::vector<std::vector<bool>>& allowed,
             std::vector<int>& child_of_match, std::vector<bool>& seen) {
  for (std::size_t c = 0; c < allowed[comp].size(); ++c) {
    if (!allowed[comp][c] || seen[c]) continue;
    seen[c] = true;
    if (child_of_match[c] < 0 ||
        augment(static_cast<std::size_t>(child_of_match[c]), allowed, child_of_match, seen)) {
      child_of_match[c] = static_cast<int>(comp);
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_normal_form(const Hypergraph& h, const Ghd& g) {
  FlatGhd flat(g);
  const std::size_t n = flat.size();
  std::vector<VertexSet> bags(n, h.no_vertices());
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& v : flat.node(i).bag)
      if (auto id = h.find_vertex(v)) bags[i].set(*id);

  // Edges contained in some bag of each subtree.
  std::vector<EdgeSet> covered(n, h.no_edges());
  for (std::size_t i : flat.postorder()) {
    for (EdgeId e = 0; e < h.num_edges(); ++e)
      if (h.edge(e).is_subset_of(bags[i])) covered[i].set(e);
    for (std::size_t c : flat.children(i)) covered[i] |= covered[c];
  }

  std::function<bool(std::size_t, const EdgeSet&)> check = [&](std::size_t u, const EdgeSet& owned) {
    auto comps = components(h, owned, bags[u]);
    const auto& kids = flat.children(u);
    if (comps.size() != kids.size()) return false;
    std::vector<std::vector<bool>> allowed(comps.size(), std::vector<bool>(kids.size()));
    for (std::size_t a = 0; a < comps.size(); ++a)
      for (std::size_t b = 0; b < kids.size(); ++b)
        allowed[a][b] = comps[a].is_subset_of(covered[kids[b]]);
    std::vector<int> match(kids.size(), -1);
    for (std::size_t a = 0; a < comps.size(); ++a) {
      std::vector<bool> seen(kids.size(), false);
      if (!augment(a, allowed, match, seen)) return false;
    }
    for (std::size_t b = 0; b < kids.size(); ++b)
      if (!check(kids[b], comps[static_cast<std::size_t>(match[b])])) return false;
    return true;
  };
  return n > 0 && check(0, h.all_edges());
}

}  // namespace ghdinc
