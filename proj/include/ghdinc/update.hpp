#pragma once

#include <optional>
#include <vector>

#include "ghdinc/decomposer.hpp"
#include "ghdinc/ghd.hpp"
#include "ghdinc/hypergraph.hpp"
#include "ghdinc/modification.hpp"
#include "ghdinc/mutable_subtree.hpp"
#include "ghdinc/scene.hpp"

namespace ghdinc {

struct UpdateOptions {
  std::size_t width = 1;
  std::optional<Clock::time_point> deadline;
};

struct UpdateResult {
  Outcome outcome = Outcome::Reject;
  std::optional<Ghd> ghd;
  SearchStats stats;                // search_calls counts decomposer fallbacks
  std::size_t scene_components = 0;  // component computations of scene creation
  std::size_t scenes = 0;            // size of the scene mapping
  bool fast_path = false;           // DelVar handled without any search
  MutableSubtree mutable_subtree;
  std::vector<BagConstraint> constraints;
};

// Decomposes δ(H) at width k, fixing the old node wherever the scene
// mapping covers the current subproblem and searching otherwise. Returns a
// GHD iff decompose(δ(H), k) does.
UpdateResult ghd_update(const Hypergraph& dh, const Ghd& g, const MutableSubtree& t,
                        const EdgeCorrespondence& s, const UpdateOptions& options);

// Everything after apply: DelVar goes through invert_trivial_delvar, other
// classes through minimal_mutable_subtree, scene_creation and ghd_update.
// A found GHD is validated against δ(H) before it is returned.
// Throws PreconditionError when g is not a width <= k GHD of h.
UpdateResult update_applied(const Hypergraph& h, const Modification& m, const Applied& applied,
                            const Ghd& g, const UpdateOptions& options);

// apply followed by update_applied.
UpdateResult update_pipeline(const Hypergraph& h, const Modification& m, const Ghd& g,
                             const UpdateOptions& options);

}  // namespace ghdinc
