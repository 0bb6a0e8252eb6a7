#include "ghdinc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include <json.hpp>
#include <spdlog/spdlog.h>

#include "ghdinc/error.hpp"
#include "ghdinc/update.hpp"

namespace ghdinc {

using nlohmann::json;

namespace {

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// xs must be positive.
std::optional<double> gmean(const std::vector<double>& xs) {
  if (xs.empty()) return std::nullopt;
  double sum = 0;
  for (double x : xs) sum += std::log(x);
  return std::exp(sum / static_cast<double>(xs.size()));
}

json optional_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

}  // namespace

BenchRow aggregate(const std::string& label, const std::vector<BenchRecord>& records,
                   double min_classic_ms) {
  BenchRow row;
  row.label = label;
  std::vector<double> classic, update, speedup;
  std::size_t positive = 0, better = 0;
  for (const auto& r : records) {
    const bool classic_timeout = r.classic == Outcome::Timeout;
    const bool update_timeout = r.update == Outcome::Timeout;
    if (!classic_timeout && r.classic_ms < min_classic_ms) continue;
    ++row.instances;
    positive += r.positive;
    better += r.update_ms < r.classic_ms;
    row.classic_timeouts += classic_timeout;
    row.update_timeouts += update_timeout;
    classic.push_back(std::max(r.classic_ms, kMinMs));
    update.push_back(std::max(r.update_ms, kMinMs));
    if (!classic_timeout && !update_timeout)
      speedup.push_back(std::max(r.classic_ms, kMinMs) / std::max(r.update_ms, kMinMs));
  }
  if (row.instances > 0) {
    row.positive_pct = 100.0 * static_cast<double>(positive) / static_cast<double>(row.instances);
    row.better_pct = 100.0 * static_cast<double>(better) / static_cast<double>(row.instances);
  }
  row.classic_gmean_ms = gmean(classic);
  row.update_gmean_ms = gmean(update);
  row.speedup_gmean = gmean(speedup);
  return row;
}

BenchReport run_bench(const std::string& corpus_dir, const RunConfig& config) {
  namespace fs = std::filesystem;
  if (config.timeout_seconds <= 0) throw PreconditionError("timeout must be positive");
  std::vector<fs::path> files;
  if (fs::is_directory(corpus_dir))
    for (const auto& entry : fs::directory_iterator(corpus_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".hg") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw Error("corpus '" + corpus_dir + "' holds no .hg instance");

  const auto budget = std::chrono::duration_cast<Clock::duration>(
      std::chrono::duration<double>(config.timeout_seconds));
  BenchReport report;
  report.config = config;
  std::uint64_t seed = config.seed;

  for (const auto& file : files) {
    const std::string name = file.stem().string();
    Hypergraph h = read_hypergraph_file(file.string());
    auto base = config.width ? decompose(h, DecomposeOptions{config.width, Clock::now() + budget, nullptr})
                             : decompose_minimal(h, config.max_width, Clock::now() + budget);
    if (!base.ghd) {
      spdlog::info("skipping {}: no decomposition ({})", name, to_string(base.outcome));
      continue;
    }
    const std::size_t k = config.width ? config.width : base.ghd->width();
    spdlog::debug("{}: width {}", name, k);

    for (ModClass c : config.classes) {
      for (std::size_t i = 0; i < config.per_class; ++i, ++seed) {
        Modification m;
        Applied applied{};
        try {
          m = generate(c, h, seed);
          applied = ghdinc::apply(m, h);
        } catch (const PreconditionError& e) {
          spdlog::debug("{} {} seed {}: {}", name, to_string(c), seed, e.what());
          continue;
        }
        BenchRecord r;
        r.instance = name;
        r.mod_class = c;
        r.seed = seed;
        r.width_before = k;

        auto t0 = Clock::now();
        auto classic = decompose(applied.hypergraph, DecomposeOptions{k, t0 + budget, nullptr});
        r.classic_ms = elapsed_ms(t0);
        r.classic = classic.outcome;
        r.classic_separators = classic.stats.separators_tried;

        t0 = Clock::now();
        auto update = update_applied(h, m, applied, *base.ghd, UpdateOptions{k, t0 + budget});
        r.update_ms = elapsed_ms(t0);
        r.update = update.outcome;
        r.update_separators = update.stats.separators_tried;
        r.scene_hits = update.stats.scene_hits;
        r.update_search_calls = update.stats.search_calls;
        r.fast_path = update.fast_path;
        r.positive = update.outcome == Outcome::Found;
        r.width_after = update.ghd ? update.ghd->width() : 0;
        report.records.push_back(std::move(r));
      }
    }
  }

  for (ModClass c : config.classes) {
    std::vector<BenchRecord> mine;
    for (const auto& r : report.records)
      if (r.mod_class == c) mine.push_back(r);
    report.rows.push_back(aggregate(to_string(c), mine, config.min_classic_ms));
  }
  report.rows.push_back(aggregate("Total", report.records, config.min_classic_ms));
  return report;
}

std::string report_to_json(const BenchReport& report, int indent) {
  json j;
  const RunConfig& c = report.config;
  json classes = json::array();
  for (ModClass m : c.classes) classes.push_back(to_string(m));
  j["config"] = {{"width", c.width},         {"max_width", c.max_width},
                 {"timeout_seconds", c.timeout_seconds}, {"seed", c.seed},
                 {"per_class", c.per_class}, {"classes", classes},
                 {"min_classic_ms", c.min_classic_ms}};
  j["records"] = json::array();
  for (const auto& r : report.records) {
    j["records"].push_back({{"instance", r.instance},
                            {"class", to_string(r.mod_class)},
                            {"seed", r.seed},
                            {"width_before", r.width_before},
                            {"width_after", r.width_after},
                            {"positive", r.positive},
                            {"classic", to_string(r.classic)},
                            {"update", to_string(r.update)},
                            {"classic_ms", r.classic_ms},
                            {"update_ms", r.update_ms},
                            {"classic_timeout", r.classic == Outcome::Timeout},
                            {"update_timeout", r.update == Outcome::Timeout},
                            {"classic_separators", r.classic_separators},
                            {"update_separators", r.update_separators},
                            {"scene_hits", r.scene_hits},
                            {"update_search_calls", r.update_search_calls},
                            {"fast_path", r.fast_path}});
  }
  j["rows"] = json::array();
  for (const auto& row : report.rows) {
    j["rows"].push_back({{"class", row.label},
                         {"instances", row.instances},
                         {"positive_pct", row.positive_pct},
                         {"better_pct", row.better_pct},
                         {"classic_gmean_ms", optional_json(row.classic_gmean_ms)},
                         {"update_gmean_ms", optional_json(row.update_gmean_ms)},
                         {"speedup_gmean", optional_json(row.speedup_gmean)},
                         {"classic_timeouts", row.classic_timeouts},
                         {"update_timeouts", row.update_timeouts}});
  }
  return j.dump(indent);
}

std::string report_table(const std::string& report_json) {
  const json j = json::parse(report_json);
  auto num = [](const json& x, int precision) {
    if (x.is_null()) return std::string("-");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", precision, x.get<double>());
    return std::string(buf);
  };
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-10s %6s %9s %9s %12s %12s %9s %8s %8s\n", "class", "n",
                "positive%", "better%", "classic_ms", "update_ms", "speedup", "to_cls", "to_upd");
  out << line;
  for (const auto& row : j.at("rows")) {
    std::snprintf(line, sizeof line, "%-10s %6zu %9s %9s %12s %12s %9s %8zu %8zu\n",
                  row.at("class").get<std::string>().c_str(), row.at("instances").get<std::size_t>(),
                  num(row.at("positive_pct"), 2).c_str(), num(row.at("better_pct"), 2).c_str(),
                  num(row.at("classic_gmean_ms"), 3).c_str(), num(row.at("update_gmean_ms"), 3).c_str(),
                  num(row.at("speedup_gmean"), 2).c_str(), row.at("classic_timeouts").get<std::size_t>(),
                  row.at("update_timeouts").get<std::size_t>());
    out << line;
  }
  return out.str();
}

}  // namespace ghdinc
