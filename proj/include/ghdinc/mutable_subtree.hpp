#pragma once

#include <string>
#include <vector>

#include "ghdinc/ghd.hpp"
#include "ghdinc/hypergraph.hpp"
#include "ghdinc/modification.hpp"

namespace ghdinc {

// T*: a connected set of node ids of an old GHD, listed in preorder.
struct MutableSubtree {
  std::vector<std::string> node_ids;

  bool contains(const std::string& id) const;
  bool empty() const { return node_ids.empty(); }
};

// δ-mutable subtree conditions for an arbitrary node-id set: on the outer
// bags every edge e of H has the same trace as s(e) in δ(H), edges of δ(H)
// outside the image of s have an empty trace, and no vertex new in δ(H)
// shares an edge with a vertex of the outer bags. Connectedness of the set
// is not checked here (see is_connected_node_set).
//
// Traces are compared edge by edge rather than as sets: set equality is not
// closed under intersecting two mutable subtrees and then has no unique
// minimum.
bool satisfies_mutable_conditions(const Ghd& g, const Hypergraph& h, const Hypergraph& dh,
                                  const EdgeCorrespondence& s, const std::vector<std::string>& node_ids);

bool is_connected_node_set(const Ghd& g, const std::vector<std::string>& node_ids);

// Minimal δ-mutable subtree: starts from all nodes and removes leaves of
// the remaining subtree, in postorder, as long as the conditions keep
// holding. Empty when the whole tree can be dropped.
MutableSubtree minimal_mutable_subtree(const Ghd& g, const Hypergraph& h, const Hypergraph& dh,
                                       const EdgeCorrespondence& s);

// C_i = B_{u_i} ∩ B(T*) for every node u_i outside T* adjacent to it.
struct BagConstraint {
  NameSet required_vertices;
  std::string anchor_node;

  bool operator==(const BagConstraint&) const = default;
};

// Sorted by anchor id. Empty for T* = ∅ and for T* = all nodes.
std::vector<BagConstraint> induced_bag_constraints(const Ghd& g, const MutableSubtree& t);

// True iff every constraint is contained in some bag of g.
bool check_bag_constraints(const Ghd& g, const std::vector<BagConstraint>& constraints);

// δ(H)*: δ(H) induced on B(T*) plus the vertices new in δ(H). A GHD of it
// that satisfies the bag constraints can take the place of T*.
Hypergraph delta_star(const Ghd& g, const Hypergraph& h, const Hypergraph& dh,
                      const MutableSubtree& t);

// The connected pieces of T ∖ T*, each re-rooted at the node adjacent to
// T* (the constraint anchor). With T* = ∅ the result is the whole tree.
std::vector<Ghd> outer_trees(const Ghd& g, const MutableSubtree& t);

// An outer tree read as a GHD of δ(H)[B(T')]: each cover edge is replaced
// by the edge of the induced hypergraph with the same trace, empty traces
// are dropped. Throws PreconditionError when a trace has no counterpart.
Ghd restrict_outer_tree(const Ghd& outer, const Hypergraph& h, const Hypergraph& dh);

// Replaces T* by gstar (a GHD of delta_star) and hangs every outer tree off
// the first node of gstar, in preorder, whose bag holds its constraint.
// Outer covers are rewritten to δ(H) edges with the same trace on the outer
// bags, preferring s_δ(e). Node ids are renumbered. Throws
// PreconditionError if a constraint is not satisfied by gstar.
Ghd attach_outer_trees(const Ghd& gstar, const Ghd& g, const MutableSubtree& t,
                       const std::vector<BagConstraint>& constraints, const Hypergraph& h,
                       const Hypergraph& dh, const EdgeCorrespondence& s);

// {"mutable": [...], "constraints": [{"vertices": [...], "anchor": "id"}, ...]}
std::string explain_json(const MutableSubtree& t, const std::vector<BagConstraint>& constraints,
                         int indent = 2);

}  // namespace ghdinc
