#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "ghdinc/decomposer.hpp"
#include "ghdinc/ghd.hpp"
#include "ghdinc/hypergraph.hpp"
#include "ghdinc/modification.hpp"
#include "ghdinc/mutable_subtree.hpp"

namespace ghdinc {

enum class SceneKind { InScene, OutScene };
const char* to_string(SceneKind kind);

struct SceneEntry {
  std::string node_id;
  SceneKind kind = SceneKind::OutScene;
  bool consumed = false;

  bool operator==(const SceneEntry&) const = default;
};

// Partial map from subhypergraphs of δ(H), keyed by their sorted edge
// names, to nodes of the old GHD. In-scenes are handed out once, out-scenes
// as often as asked.
class SceneMapping {
 public:
  // A later entry for the same key replaces the earlier one.
  void set(const NameSet& key, SceneEntry entry) { entries_[key] = std::move(entry); }
  const SceneEntry* find(const NameSet& key) const;
  // The node for key, marking in-scenes as consumed. nullopt when unmapped
  // or already consumed.
  std::optional<std::string> take(const NameSet& key);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<NameSet, SceneEntry>& entries() const { return entries_; }

 private:
  std::map<NameSet, SceneEntry> entries_;
};

struct SceneCreationResult {
  SceneMapping mapping;
  std::size_t components_computed = 0;
};

// Replays the old decomposition top-down on δ(H). At a node n with
// subproblem H' the separator is δ(B_n) restricted to V(H'); the node is
// mapped when that separator lies in B(δ(λ_n)) and the [separator]-
// components of H' pair up first-fit with n's children. Any failure hands
// the subtree T_n to a bottom-up pass that maps nodes without T* below
// them by the δ(H)-edges their subtree covers, when the component count
// matches. Nodes in T* give in-scenes, all others out-scenes.
// Requires g in normal form for best results; never fails.
SceneCreationResult scene_creation(const Ghd& g, const Hypergraph& dh, const MutableSubtree& t,
                                   const EdgeCorrespondence& s);

// Serves a SceneMapping to the decomposer. A proposal for component C is
// the mapped node's δ(bag) ∩ V(C) with cover δ(λ) (vanished edges
// dropped); the decomposer checks it like any separator.
class SceneAdapter : public SceneSource {
 public:
  SceneAdapter(const Ghd& g, const Hypergraph& dh, SceneMapping& mapping,
               const EdgeCorrespondence& s);
  std::optional<SceneProposal> lookup(const EdgeSet& component) override;

  std::size_t lookups() const { return lookups_; }

 private:
  const Hypergraph& dh_;
  SceneMapping& mapping_;
  std::map<std::string, SceneProposal> images_;  // node id -> (δ(λ), δ(B))
  std::size_t lookups_ = 0;
};

// δ(B) and δ(λ) of one old node, as bitsets over δ(H).
VertexSet image_bag(const Hypergraph& dh, const NameSet& bag);
EdgeSet image_cover(const Hypergraph& dh, const NameSet& cover, const EdgeCorrespondence& s);

}  // namespace ghdinc
