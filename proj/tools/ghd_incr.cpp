// ghd-incr: decompose hypergraphs and update decompositions after a
// modification.
//
// Exit codes: 0 found / valid, 1 reject / invalid, 2 usage or parse error,
// 3 timeout.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "ghdinc/bench.hpp"
#include "ghdinc/decomposer.hpp"
#include "ghdinc/error.hpp"
#include "ghdinc/ghd.hpp"
#include "ghdinc/modification.hpp"
#include "ghdinc/update.hpp"

using namespace ghdinc;

namespace {

constexpr int kFound = 0;
constexpr int kReject = 1;
constexpr int kUsage = 2;
constexpr int kTimeout = 3;

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("ghd-incr");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  const char* level = std::getenv("GHD_INCR_LOG");
  spdlog::set_level(level && std::string(level) == "debug" ? spdlog::level::debug
                                                           : spdlog::level::info);
}

std::optional<Clock::time_point> deadline_after(double seconds) {
  if (seconds <= 0) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text << '\n';
}

int outcome_code(Outcome o) {
  switch (o) {
    case Outcome::Found: return kFound;
    case Outcome::Reject: return kReject;
    case Outcome::Timeout: return kTimeout;
  }
  return kUsage;
}

struct Args {
  std::string hypergraph, mod, ghd, out, corpus, mod_class, classes;
  std::size_t width = 0;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  double timeout = 0;
  double min_classic_ms = 15.0;
  bool explain = false;
  bool pretty = false;
};

int cmd_decompose(const Args& a) {
  Hypergraph h = read_hypergraph_file(a.hypergraph);
  auto r = decompose(h, DecomposeOptions{a.width, deadline_after(a.timeout), nullptr});
  spdlog::debug("separators tried: {}, subproblems: {}", r.stats.separators_tried, r.stats.calls);
  if (r.ghd) emit(ghd_to_json(*r.ghd), a.out);
  else spdlog::info("{} at width {}", to_string(r.outcome), a.width);
  return outcome_code(r.outcome);
}

int cmd_update(const Args& a) {
  Hypergraph h = read_hypergraph_file(a.hypergraph);
  Modification m = read_modification_file(a.mod);
  Ghd g = read_ghd_file(a.ghd);
  auto violations = validate(h, g, a.width);
  if (!violations.empty()) {
    for (const auto& v : violations) spdlog::error("input GHD: {}", v.message);
    return kUsage;
  }
  Applied applied = ghdinc::apply(m, h);
  auto r = update_applied(h, m, applied, g, UpdateOptions{a.width, deadline_after(a.timeout)});
  if (r.fast_path) spdlog::info("fast-path: {} handled without search", to_string(class_of(m)));
  spdlog::debug("mutable subtree: {} nodes, scenes: {}, scene hits: {}, fallback searches: {}",
                r.mutable_subtree.node_ids.size(), r.scenes, r.stats.scene_hits, r.stats.search_calls);
  if (a.explain) std::cerr << explain_json(r.mutable_subtree, r.constraints) << '\n';
  if (r.ghd) emit(ghd_to_json(*r.ghd), a.out);
  else spdlog::info("{} at width {}", to_string(r.outcome), a.width);
  return outcome_code(r.outcome);
}

int cmd_mutate(const Args& a) {
  Hypergraph h = read_hypergraph_file(a.hypergraph);
  auto c = mod_class_from_string(a.mod_class);
  if (!c) throw CLI::ValidationError("--class", "unknown modification class '" + a.mod_class + "'");
  if (!a.out.empty()) std::filesystem::create_directories(a.out);
  for (std::size_t i = 0; i < a.count; ++i) {
    const std::uint64_t seed = a.seed + i;
    const std::string text = modification_to_json(generate(*c, h, seed));
    if (a.out.empty()) {
      std::cout << text << '\n';
    } else {
      auto path = std::filesystem::path(a.out) / (a.mod_class + "_" + std::to_string(seed) + ".json");
      emit(text, path.string());
    }
  }
  return 0;
}

int cmd_validate(const Args& a) {
  Hypergraph h = read_hypergraph_file(a.hypergraph);
  Ghd g = read_ghd_file(a.ghd);
  const std::size_t k = a.width ? a.width : std::numeric_limits<std::size_t>::max();
  auto violations = validate(h, g, k);
  for (const auto& v : violations) std::cout << v.message << '\n';
  if (violations.empty()) std::cout << "valid, width " << g.width() << '\n';
  return violations.empty() ? 0 : 1;
}

int cmd_bench(const Args& a) {
  RunConfig config;
  config.width = a.width;
  if (a.timeout > 0) config.timeout_seconds = a.timeout;
  config.seed = a.seed;
  config.per_class = a.count;
  config.min_classic_ms = a.min_classic_ms;
  if (!a.classes.empty()) {
    config.classes.clear();
    std::stringstream in(a.classes);
    for (std::string item; std::getline(in, item, ',');) {
      auto c = mod_class_from_string(item);
      if (!c) throw CLI::ValidationError("--classes", "unknown modification class '" + item + "'");
      config.classes.push_back(*c);
    }
  }
  const std::string json = report_to_json(run_bench(a.corpus, config));
  emit(a.pretty ? report_table(json) : json, a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Generalized hypertree decompositions with incremental updates"};
  app.require_subcommand(1);
  Args a;

  auto* dec = app.add_subcommand("decompose", "Find a GHD of width <= K");
  dec->add_option("--hypergraph", a.hypergraph)->required()->check(CLI::ExistingFile);
  dec->add_option("--width", a.width)->required()->check(CLI::PositiveNumber);
  dec->add_option("--out", a.out, "Write the GHD here instead of stdout");
  dec->add_option("--timeout", a.timeout, "Seconds, 0 for none");

  auto* upd = app.add_subcommand("update", "Update a GHD after one modification");
  upd->add_option("--hypergraph", a.hypergraph)->required()->check(CLI::ExistingFile);
  upd->add_option("--mod", a.mod)->required()->check(CLI::ExistingFile);
  upd->add_option("--ghd", a.ghd)->required()->check(CLI::ExistingFile);
  upd->add_option("--width", a.width)->required()->check(CLI::PositiveNumber);
  upd->add_option("--out", a.out);
  upd->add_option("--timeout", a.timeout);
  upd->add_flag("--explain", a.explain, "Dump the mutable subtree and bag constraints to stderr");

  auto* mut = app.add_subcommand("mutate", "Generate random modifications");
  mut->add_option("--hypergraph", a.hypergraph)->required()->check(CLI::ExistingFile);
  mut->add_option("--class", a.mod_class)->required();
  mut->add_option("--seed", a.seed);
  mut->add_option("--count", a.count)->check(CLI::PositiveNumber);
  mut->add_option("--out", a.out, "Directory for <class>_<seed>.json files");

  auto* val = app.add_subcommand("validate", "Check a GHD against a hypergraph");
  val->add_option("--hypergraph", a.hypergraph)->required()->check(CLI::ExistingFile);
  val->add_option("--ghd", a.ghd)->required();
  val->add_option("--width", a.width, "Width bound, 0 for none");

  auto* ben = app.add_subcommand("bench", "Classic vs Update over a corpus");
  ben->add_option("--corpus", a.corpus)->required()->check(CLI::ExistingDirectory);
  ben->add_option("--width", a.width, "0 uses each instance's minimal width");
  ben->add_option("--timeout", a.timeout);
  ben->add_option("--seed", a.seed);
  ben->add_option("--count", a.count = 5, "Modifications per class")->check(CLI::PositiveNumber);
  ben->add_option("--classes", a.classes, "Comma-separated class list");
  ben->add_option("--min-classic-ms", a.min_classic_ms);
  ben->add_flag("--pretty", a.pretty);
  ben->add_option("--out", a.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*dec) return cmd_decompose(a);
    if (*upd) return cmd_update(a);
    if (*mut) return cmd_mutate(a);
    if (*val) return cmd_validate(a);
    if (*ben) return cmd_bench(a);
  } catch (const CLI::ValidationError& e) {
    spdlog::error("{}", e.what());
  } catch (const ParseError& e) {
    spdlog::error("parse error: {}", e.what());
  } catch (const PreconditionError& e) {
    spdlog::error("{}", e.what());
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
  }
  return kUsage;
}
