#include "ghdinc/scene.hpp"

#include <functional>

namespace ghdinc {

const char* to_string(SceneKind kind) {
  return kind == SceneKind::InScene ? "in-scene" : "out-scene";
}

const SceneEntry* SceneMapping::find(const NameSet& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<std::string> SceneMapping::take(const NameSet& key) {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  SceneEntry& e = it->second;
  if (e.kind == SceneKind::InScene) {
    if (e.consumed) return std::nullopt;
    e.consumed = true;
  }
  return e.node_id;
}

VertexSet image_bag(const Hypergraph& dh, const NameSet& bag) {
  VertexSet out = dh.no_vertices();
  for (const auto& v : bag)
    if (auto id = dh.find_vertex(v)) out.set(*id);
  return out;
}

EdgeSet image_cover(const Hypergraph& dh, const NameSet& cover, const EdgeCorrespondence& s) {
  EdgeSet out = dh.no_edges();
  for (const auto& e : cover) {
    auto it = s.find(e);
    if (it == s.end() || !it->second) continue;
    if (auto id = dh.find_edge(*it->second)) out.set(*id);
  }
  return out;
}

namespace {

class Builder {
 public:
  Builder(const Ghd& g, const Hypergraph& dh, const MutableSubtree& t, const EdgeCorrespondence& s)
      : flat_(g), dh_(dh) {
    const std::size_t n = flat_.size();
    bags_.reserve(n);
    covers_.reserve(n);
    in_t_.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      bags_.push_back(image_bag(dh, flat_.node(i).bag));
      covers_.push_back(image_cover(dh, flat_.node(i).cover, s));
      in_t_[i] = t.contains(flat_.node(i).id);
    }
    // touches_t_[i]: some node of T_i lies in T*.
    touches_t_ = in_t_;
    for (std::size_t i : flat_.postorder())
      for (std::size_t c : flat_.children(i)) touches_t_[i] = touches_t_[i] || touches_t_[c];
  }

  SceneCreationResult run() {
    down(0, dh_.all_edges());
    return std::move(result_);
  }

 private:
  void map(std::size_t i, const EdgeSet& key) {
    result_.mapping.set(dh_.edge_names_of(key),
                        {flat_.node(i).id, in_t_[i] ? SceneKind::InScene : SceneKind::OutScene, false});
  }

  void down(std::size_t n, const EdgeSet& sub) {
    const VertexSet sep = bags_[n] & cover_union(dh_, sub);
    if (!sep.is_subset_of(cover_union(dh_, covers_[n]))) return up(n, sub);
    auto comps = components(dh_, sub, sep);
    ++result_.components_computed;
    const auto& kids = flat_.children(n);
    if (comps.size() != kids.size()) return up(n, sub);

    // Pair every child with the first unused component it reaches into;
    // all pairs are fixed before descending so a failure costs nothing below.
    std::vector<std::size_t> match(kids.size());
    std::vector<bool> used(comps.size(), false);
    for (std::size_t k = 0; k < kids.size(); ++k) {
      bool found = false;
      for (std::size_t c = 0; c < comps.size() && !found; ++c) {
        if (used[c]) continue;
        VertexSet outside = cover_union(dh_, comps[c]) - sep;
        if (outside.intersects(bags_[kids[k]])) {
          used[c] = true;
          match[k] = c;
          found = true;
        }
      }
      if (!found) return up(n, sub);
    }
    map(n, sub);
    for (std::size_t k = 0; k < kids.size(); ++k) down(kids[k], comps[match[k]]);
  }

  // Bottom-up over T_n: maps nodes with no T* node below them by the edges
  // of `sub` that their subtree covers.
  void up(std::size_t n, const EdgeSet& sub) {
    std::function<EdgeSet(std::size_t)> visit = [&](std::size_t u) {
      EdgeSet covered = dh_.no_edges();
      for (std::size_t c : flat_.children(u)) covered |= visit(c);
      if (touches_t_[u]) return covered;
      for (EdgeId e = 0; e < dh_.num_edges(); ++e)
        if (sub.test(e) && dh_.edge(e).is_subset_of(bags_[u])) covered.set(e);
      auto comps = components(dh_, covered, bags_[u]);
      ++result_.components_computed;
      if (covered.any() && comps.size() == flat_.children(u).size()) map(u, covered);
      return covered;
    };
    visit(n);
  }

  FlatGhd flat_;
  const Hypergraph& dh_;
  std::vector<VertexSet> bags_;
  std::vector<EdgeSet> covers_;
  std::vector<bool> in_t_;
  std::vector<bool> touches_t_;
  SceneCreationResult result_;
};

}  // namespace

SceneCreationResult scene_creation(const Ghd& g, const Hypergraph& dh, const MutableSubtree& t,
                                   const EdgeCorrespondence& s) {
  return Builder(g, dh, t, s).run();
}

SceneAdapter::SceneAdapter(const Ghd& g, const Hypergraph& dh, SceneMapping& mapping,
                           const EdgeCorrespondence& s)
    : dh_(dh), mapping_(mapping) {
  FlatGhd flat(g);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const GhdNode& n = flat.node(i);
    images_.emplace(n.id, SceneProposal{image_cover(dh, n.cover, s), image_bag(dh, n.bag), n.id});
  }
}

std::optional<SceneProposal> SceneAdapter::lookup(const EdgeSet& component) {
  ++lookups_;
  if (mapping_.empty()) return std::nullopt;
  auto id = mapping_.take(dh_.edge_names_of(component));
  if (!id) return std::nullopt;
  auto it = images_.find(*id);
  if (it == images_.end()) return std::nullopt;
  SceneProposal p = it->second;
  p.bag &= cover_union(dh_, component);
  return p;
}

}  // namespace ghdinc
