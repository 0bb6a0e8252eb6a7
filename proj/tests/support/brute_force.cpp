#include "support/brute_force.hpp"

#include <algorithm>
#include <cmath>

#include "ghdinc/mutable_subtree.hpp"

namespace fixtures {

using namespace ghdinc;

NameFamily closure_components(const Hypergraph& h, const EdgeSet& within, const VertexSet& separator) {
  std::vector<EdgeId> live;
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (within.test(e) && !h.edge(e).is_subset_of(separator)) live.push_back(e);
  const std::size_t n = live.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      reach[i][j] = i == j || ((h.edge(live[i]) & h.edge(live[j])) - separator).any();
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][m] && reach[m][j]) reach[i][j] = true;
  NameFamily out;
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::string> c;
    for (std::size_t j = 0; j < n; ++j)
      if (reach[i][j]) c.insert(h.edge_name(live[j]));
    out.insert(c);
  }
  return out;
}

NameFamily as_family(const Hypergraph& h, const std::vector<EdgeSet>& comps) {
  NameFamily out;
  for (const auto& c : comps) {
    auto names = h.edge_names_of(c);
    out.insert({names.begin(), names.end()});
  }
  return out;
}

std::vector<std::vector<std::string>> connected_node_sets(const Ghd& g) {
  FlatGhd flat(g);
  const std::size_t n = flat.size();
  std::vector<std::vector<std::string>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) ids.push_back(flat.node(i).id);
    // connected iff a flood fill from the first member reaches all members
    if (!ids.empty()) {
      std::vector<bool> seen(n, false);
      std::vector<std::size_t> stack{static_cast<std::size_t>(__builtin_ctzll(mask))};
      seen[stack.back()] = true;
      std::size_t reached = 0;
      while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        ++reached;
        for (std::size_t y : flat.neighbours(x))
          if ((mask >> y & 1) && !seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
      }
      if (reached != ids.size()) continue;
    }
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  return out;
}

std::vector<std::vector<std::string>> minimal_mutable_sets(const Ghd& g, const Hypergraph& h,
                                                           const Hypergraph& dh,
                                                           const EdgeCorrespondence& s) {
  std::vector<std::vector<std::string>> ok;
  for (auto& ids : connected_node_sets(g))
    if (satisfies_mutable_conditions(g, h, dh, s, ids)) ok.push_back(std::move(ids));
  std::vector<std::vector<std::string>> minimal;
  for (const auto& a : ok) {
    bool dominated = false;
    for (const auto& b : ok)
      if (b.size() < a.size() && std::includes(a.begin(), a.end(), b.begin(), b.end())) dominated = true;
    if (!dominated) minimal.push_back(a);
  }
  return minimal;
}

nlohmann::json recompute_row(const nlohmann::json& records, const std::string& label,
                             double min_classic_ms) {
  std::size_t n = 0, positive = 0, better = 0, to_c = 0, to_u = 0;
  double log_c = 0, log_u = 0, log_s = 0;
  std::size_t n_s = 0;
  for (const auto& r : records) {
    if (label != "Total" && r.at("class") != label) continue;
    const bool tc = r.at("classic_timeout").get<bool>();
    const bool tu = r.at("update_timeout").get<bool>();
    const double c = r.at("classic_ms").get<double>();
    const double u = r.at("update_ms").get<double>();
    if (!tc && c < min_classic_ms) continue;
    ++n;
    positive += r.at("positive").get<bool>();
    better += u < c;
    to_c += tc;
    to_u += tu;
    log_c += std::log(std::max(c, 0.001));
    log_u += std::log(std::max(u, 0.001));
    if (!tc && !tu) {
      log_s += std::log(std::max(c, 0.001) / std::max(u, 0.001));
      ++n_s;
    }
  }
  auto mean = [](double sum, std::size_t k) {
    return k ? nlohmann::json(std::exp(sum / static_cast<double>(k))) : nlohmann::json(nullptr);
  };
  return {{"class", label},
          {"instances", n},
          {"positive_pct", n ? 100.0 * static_cast<double>(positive) / static_cast<double>(n) : 0.0},
          {"better_pct", n ? 100.0 * static_cast<double>(better) / static_cast<double>(n) : 0.0},
          {"classic_gmean_ms", mean(log_c, n)},
          {"update_gmean_ms", mean(log_u, n)},
          {"speedup_gmean", mean(log_s, n_s)},
          {"classic_timeouts", to_c},
          {"update_timeouts", to_u}};
}

}  // namespace fixtures
