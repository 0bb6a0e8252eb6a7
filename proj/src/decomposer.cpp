#include "ghdinc/decomposer.hpp"

#include <unordered_set>

#include <boost/functional/hash.hpp>

#include "ghdinc/error.hpp"

namespace ghdinc {

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Found: return "found";
    case Outcome::Reject: return "reject";
    case Outcome::Timeout: return "timeout";
  }
  return "unknown";
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  separators_tried += o.separators_tried;
  components_computed += o.components_computed;
  calls += o.calls;
  search_calls += o.search_calls;
  memo_hits += o.memo_hits;
  scene_hits += o.scene_hits;
  return *this;
}

SeparatorEnumerator::SeparatorEnumerator(const Hypergraph& h, const SearchContext& ctx)
    : h_(h), ctx_(ctx), scope_(cover_union(h, ctx.component) | ctx.connector) {
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (h.edge(e).intersects(scope_)) universe_.push_back(e);
}

bool SeparatorEnumerator::advance() {
  auto push = [&](std::size_t pos) {
    VertexSet u = unions_.empty() ? h_.no_vertices() : unions_.back();
    u |= h_.edge(universe_[pos]);
    pick_.push_back(pos);
    unions_.push_back(std::move(u));
  };
  if (!started_) {
    started_ = true;
    if (universe_.empty() || ctx_.width == 0) return false;
    push(0);
    return true;
  }
  if (pick_.size() < ctx_.width && pick_.back() + 1 < universe_.size()) {
    push(pick_.back() + 1);
    return true;
  }
  while (!pick_.empty()) {
    std::size_t last = pick_.back();
    pick_.pop_back();
    unions_.pop_back();
    if (last + 1 < universe_.size()) {
      push(last + 1);
      return true;
    }
  }
  return false;
}

std::optional<Separator> SeparatorEnumerator::next() {
  while (advance()) {
    const VertexSet& covered = unions_.back();
    if (!ctx_.connector.is_subset_of(covered)) continue;
    Separator sep{h_.no_edges(), covered & scope_};
    for (std::size_t pos : pick_) sep.cover.set(universe_[pos]);
    return sep;
  }
  return std::nullopt;
}

namespace {

struct TimeoutSignal {};

struct BitsetHash {
  std::size_t operator()(const boost::dynamic_bitset<std::uint64_t>& b) const {
    return boost::hash_value(b);
  }
};

struct StateHash {
  std::size_t operator()(const std::pair<EdgeSet, VertexSet>& s) const {
    std::size_t seed = boost::hash_value(s.first);
    boost::hash_combine(seed, boost::hash_value(s.second));
    return seed;
  }
};

struct Built {
  EdgeSet cover;
  VertexSet bag;
  std::vector<Built> children;
};

class Engine {
 public:
  Engine(const Hypergraph& h, const DecomposeOptions& options) : h_(h), options_(options) {}

  std::optional<Built> solve(const EdgeSet& component, const VertexSet& connector) {
    ++stats.calls;
    check_deadline();
    if (rejected_.count({component, connector})) {
      ++stats.memo_hits;
      return std::nullopt;
    }
    if (options_.scenes) {
      if (auto proposal = options_.scenes->lookup(component)) {
        if (proposal->bag.is_subset_of(cover_union(h_, proposal->cover))) {
          if (auto built = expand(component, connector, proposal->cover, proposal->bag)) {
            ++stats.scene_hits;
            return built;
          }
        }
      }
    }

    ++stats.search_calls;
    SearchContext ctx{component, connector, options_.width};
    SeparatorEnumerator separators(h_, ctx);
    std::unordered_set<VertexSet, BitsetHash> tried;
    while (auto sep = separators.next()) {
      check_deadline();
      if (!tried.insert(sep->bag).second) continue;
      ++stats.separators_tried;
      if (auto built = expand(component, connector, sep->cover, sep->bag)) return built;
    }
    rejected_.insert({component, connector});
    return std::nullopt;
  }

  SearchStats stats;

 private:
  // Fixes (cover, bag) as the root of the subproblem and recurses into its
  // [bag]-components. Every component must be strictly smaller.
  std::optional<Built> expand(const EdgeSet& component, const VertexSet& connector,
                              const EdgeSet& cover, const VertexSet& bag) {
    const std::size_t size = cover.count();
    if (size == 0 || size > options_.width || !connector.is_subset_of(bag)) return std::nullopt;
    auto comps = components(h_, component, bag);
    ++stats.components_computed;
    for (const auto& c : comps)
      if (c == component) return std::nullopt;

    Built node{cover, bag, {}};
    node.children.reserve(comps.size());
    for (const auto& c : comps) {
      VertexSet child_connector = bag & cover_union(h_, c);
      auto child = solve(c, child_connector);
      if (!child) return std::nullopt;
      node.children.push_back(std::move(*child));
    }
    return node;
  }

  void check_deadline() const {
    if (options_.deadline && Clock::now() >= *options_.deadline) throw TimeoutSignal{};
  }

  const Hypergraph& h_;
  const DecomposeOptions& options_;
  std::unordered_set<std::pair<EdgeSet, VertexSet>, StateHash> rejected_;
};

GhdNode to_node(const Hypergraph& h, const Built& b) {
  GhdNode n{"", h.names_of(b.bag), h.edge_names_of(b.cover), {}};
  for (const auto& c : b.children) n.children.push_back(to_node(h, c));
  return n;
}

}  // namespace

DecomposeResult decompose(const Hypergraph& h, const DecomposeOptions& options) {
  if (options.width == 0) throw PreconditionError("width bound must be at least 1");
  if (h.empty()) throw PreconditionError("cannot decompose an empty hypergraph");
  Engine engine(h, options);
  DecomposeResult result;
  try {
    auto built = engine.solve(h.all_edges(), h.no_vertices());
    if (built) {
      Ghd g(to_node(h, *built));
      renumber(g);
      result.ghd = std::move(g);
      result.outcome = Outcome::Found;
    } else {
      result.outcome = Outcome::Reject;
    }
  } catch (const TimeoutSignal&) {
    result.outcome = Outcome::Timeout;
  }
  result.stats = engine.stats;
  return result;
}

DecomposeResult decompose_minimal(const Hypergraph& h, std::size_t max_width,
                                  std::optional<Clock::time_point> deadline) {
  DecomposeResult last;
  SearchStats total;
  for (std::size_t k = 1; k <= max_width; ++k) {
    last = decompose(h, DecomposeOptions{k, deadline, nullptr});
    total += last.stats;
    if (last.outcome != Outcome::Reject) break;
  }
  last.stats = total;
  return last;
}

}  // namespace ghdinc
