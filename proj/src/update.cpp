#include "ghdinc/update.hpp"

#include "ghdinc/error.hpp"

namespace ghdinc {

namespace {

void check_output(const Hypergraph& dh, const UpdateResult& r, std::size_t k) {
  if (!r.ghd) return;
  auto violations = validate(dh, *r.ghd, k);
  if (!violations.empty())
    throw Error("updated decomposition is invalid: " + violations.front().message);
}

}  // namespace

UpdateResult ghd_update(const Hypergraph& dh, const Ghd& g, const MutableSubtree& t,
                        const EdgeCorrespondence& s, const UpdateOptions& options) {
  UpdateResult out;
  out.mutable_subtree = t;
  auto scenes = scene_creation(g, dh, t, s);
  out.scene_components = scenes.components_computed;
  out.scenes = scenes.mapping.size();
  SceneAdapter adapter(g, dh, scenes.mapping, s);
  auto r = decompose(dh, DecomposeOptions{options.width, options.deadline, &adapter});
  out.outcome = r.outcome;
  out.ghd = std::move(r.ghd);
  out.stats = r.stats;
  check_output(dh, out, options.width);
  return out;
}

UpdateResult update_applied(const Hypergraph& h, const Modification& m, const Applied& applied,
                            const Ghd& g, const UpdateOptions& options) {
  if (auto violations = validate(h, g, options.width); !violations.empty())
    throw PreconditionError("input decomposition is invalid: " + violations.front().message);
  const Hypergraph& dh = applied.hypergraph;

  if (const auto* d = std::get_if<DelVar>(&m)) {
    UpdateResult out;
    out.fast_path = true;
    Ghd result = invert_trivial_delvar(*d, g, applied.correspondence);
    renumber(result);
    out.ghd = std::move(result);
    out.outcome = Outcome::Found;
    check_output(dh, out, options.width);
    return out;
  }

  auto t = minimal_mutable_subtree(g, h, dh, applied.correspondence);
  auto constraints = induced_bag_constraints(g, t);
  UpdateResult out = ghd_update(dh, g, t, applied.correspondence, options);
  out.constraints = std::move(constraints);
  return out;
}

UpdateResult update_pipeline(const Hypergraph& h, const Modification& m, const Ghd& g,
                             const UpdateOptions& options) {
  return update_applied(h, m, ghdinc::apply(m, h), g, options);
}

}  // namespace ghdinc
