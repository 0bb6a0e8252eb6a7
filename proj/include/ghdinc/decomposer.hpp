#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghdinc/ghd.hpp"
#include "ghdinc/hypergraph.hpp"

namespace ghdinc {

using Clock = std::chrono::steady_clock;

enum class Outcome { Found, Reject, Timeout };
const char* to_string(Outcome outcome);

struct SearchStats {
  std::uint64_t separators_tried = 0;
  std::uint64_t components_computed = 0;
  std::uint64_t calls = 0;         // subproblems visited
  std::uint64_t search_calls = 0;  // subproblems that fell back to separator search
  std::uint64_t memo_hits = 0;
  std::uint64_t scene_hits = 0;  // subproblems solved around a proposed scene node

  SearchStats& operator+=(const SearchStats& o);
};

struct DecomposeResult {
  Outcome outcome = Outcome::Reject;
  std::optional<Ghd> ghd;
  SearchStats stats;
};

// One subproblem of the top-down search: the edges still to be decomposed
// and the vertices they share with the parent bag.
struct SearchContext {
  EdgeSet component;
  VertexSet connector;
  std::size_t width = 1;
};

struct Separator {
  EdgeSet cover;
  VertexSet bag;
};

// Enumerates covers λ with 1 <= |λ| <= k and Conn ⊆ B(λ), together with
// bag = B(λ) ∩ (V(C) ∪ Conn), in lexicographic order of edge-index tuples.
// Edges disjoint from V(C) ∪ Conn never change the bag and are skipped.
class SeparatorEnumerator {
 public:
  SeparatorEnumerator(const Hypergraph& h, const SearchContext& ctx);
  std::optional<Separator> next();

 private:
  bool advance();

  const Hypergraph& h_;
  const SearchContext& ctx_;
  VertexSet scope_;
  std::vector<EdgeId> universe_;
  std::vector<std::size_t> pick_;  // positions into universe_
  std::vector<VertexSet> unions_;  // unions_[i] = B(first i+1 picks)
  bool started_ = false;
};

// A node proposed for a subproblem before search (see scene mappings).
// The engine checks it like any other separator and ignores it if unusable.
struct SceneProposal {
  EdgeSet cover;
  VertexSet bag;
  std::string node_id;
};

class SceneSource {
 public:
  virtual ~SceneSource() = default;
  virtual std::optional<SceneProposal> lookup(const EdgeSet& component) = 0;
};

struct DecomposeOptions {
  std::size_t width = 1;
  std::optional<Clock::time_point> deadline;
  SceneSource* scenes = nullptr;
};

// Complete top-down search for a width <= k GHD in normal form. Rejected
// (component, connector) pairs are memoised for the duration of one call.
// Throws PreconditionError when k == 0 or h is empty.
DecomposeResult decompose(const Hypergraph& h, const DecomposeOptions& options);
inline DecomposeResult decompose(const Hypergraph& h, std::size_t k) {
  return decompose(h, DecomposeOptions{k, std::nullopt, nullptr});
}

// Smallest k in [1, max_width] for which decompose succeeds.
DecomposeResult decompose_minimal(const Hypergraph& h, std::size_t max_width,
                                  std::optional<Clock::time_point> deadline = std::nullopt);

}  // namespace ghdinc
