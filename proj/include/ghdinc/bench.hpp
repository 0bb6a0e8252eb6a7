#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghdinc/decomposer.hpp"
#include "ghdinc/modification.hpp"

namespace ghdinc {

struct RunConfig {
  std::size_t width = 0;  // 0: use the minimal width of each instance
  std::size_t max_width = 8;
  double timeout_seconds = 60.0;
  std::uint64_t seed = 1;
  std::size_t per_class = 5;
  std::vector<ModClass> classes{std::begin(kAllModClasses), std::end(kAllModClasses)};
  double min_classic_ms = 15.0;
};

struct BenchRecord {
  std::string instance;
  ModClass mod_class = ModClass::AddVar;
  std::uint64_t seed = 0;
  std::size_t width_before = 0;  // k the update runs at
  std::size_t width_after = 0;   // width of the updated GHD, 0 when none
  bool positive = false;         // δ(H) still has a GHD of width k
  Outcome classic = Outcome::Reject;
  Outcome update = Outcome::Reject;
  double classic_ms = 0;
  double update_ms = 0;
  std::uint64_t classic_separators = 0;
  std::uint64_t update_separators = 0;
  std::uint64_t scene_hits = 0;
  std::uint64_t update_search_calls = 0;
  bool fast_path = false;
};

// One row of the aggregate table. Means are geometric, over durations
// clamped below at kMinMs; speedups skip records where either side timed
// out. nullopt when there is nothing to average.
struct BenchRow {
  std::string label;
  std::size_t instances = 0;
  double positive_pct = 0;
  double better_pct = 0;
  std::optional<double> classic_gmean_ms;
  std::optional<double> update_gmean_ms;
  std::optional<double> speedup_gmean;
  std::size_t classic_timeouts = 0;
  std::size_t update_timeouts = 0;
};

inline constexpr double kMinMs = 0.001;

struct BenchReport {
  RunConfig config;
  std::vector<BenchRecord> records;
  std::vector<BenchRow> rows;  // one per class in config.classes, then "Total"
};

// Records with classic_ms below the floor are left out, unless Classic
// timed out.
BenchRow aggregate(const std::string& label, const std::vector<BenchRecord>& records,
                   double min_classic_ms);

// Runs Classic (decompose δ(H) from scratch) against Update (the update
// pipeline after apply) on every `.hg` file of the directory, in name
// order. Throws Error when the directory holds no instance.
BenchReport run_bench(const std::string& corpus_dir, const RunConfig& config);

std::string report_to_json(const BenchReport& report, int indent = 2);
// Fixed-width table rendered from a JSON report.
std::string report_table(const std::string& report_json);

}  // namespace ghdinc
