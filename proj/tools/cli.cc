/// @file cli.cc
#include "cli.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "mbd/dpi_json.h"
#include "mbd/error.h"
#include "mbd/harness.h"
#include "mbd/hbfhs.h"
#include "mbd/sequential.h"

namespace mbd::cli {

namespace {

const std::map<std::string, Algorithm> kAlgorithms = {
    {"hstree", Algorithm::kHsTree},
    {"rbfhs", Algorithm::kRbfHs},
    {"hbfhs", Algorithm::kHbfHs}};
const std::map<std::string, CostMode> kModes = {{"mincard", CostMode::kMinCard},
                                                {"maxprob", CostMode::kMaxProb}};
const std::map<std::string, Selector> kSelectors = {{"spl", Selector::kSpl},
                                                    {"ent", Selector::kEnt}};
const std::map<std::string, GeneratorMode> kGenModes = {
    {"explicit", GeneratorMode::kExplicitConflicts},
    {"cnf", GeneratorMode::kCnf}};

constexpr const char* kEmptySet = "\xE2\x88\x85";  // U+2205

template <typename T>
std::vector<std::string> Keys(const std::map<std::string, T>& m) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : m) keys.push_back(k);
  return keys;
}

std::string Join(const std::vector<std::string>& names) {
  if (names.empty()) return kEmptySet;
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

std::size_t ParseLd(const std::string& text) {
  if (text == "all") return kAllDiagnoses;
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || v == 0 || text[0] == '-')
    throw ConfigError("--ld expects a positive integer or 'all', got '" + text + "'");
  return static_cast<std::size_t>(v);
}

// nodecount:N | memfrac:F[:BUDGET]
SwitchCriterion ParseSwitch(const std::string& text) {
  const std::vector<std::string> parts = Split(text, ':');
  try {
    if (parts.size() == 2 && parts[0] == "nodecount") {
      std::size_t pos = 0;
      long long n = std::stoll(parts[1], &pos);
      if (pos == parts[1].size() && n > 0) {
        return NodeCount{static_cast<std::size_t>(n)};
      }
    } else if ((parts.size() == 2 || parts.size() == 3) &&
               parts[0] == "memfrac") {
      std::size_t pos = 0;
      double f = std::stod(parts[1], &pos);
      if (pos == parts[1].size()) {
        std::size_t budget = 1000000;
        if (parts.size() == 3) {
          long long b = std::stoll(parts[2], &pos);
          if (pos != parts[2].size() || b <= 0) throw ConfigError("");
          budget = static_cast<std::size_t>(b);
        }
        SwitchCriterion c = MemoryFraction{f, budget};
        ValidateCriterion(c);
        return c;
      }
    }
  } catch (const std::exception&) {
  }
  throw ConfigError("--switch expects nodecount:N or memfrac:F[:BUDGET], got '" +
                    text + "'");
}

CostMode DefaultMode(const Dpi& dpi, const std::string& flag) {
  if (!flag.empty()) return kModes.at(flag);
  return dpi.probabilities() ? CostMode::kMaxProb : CostMode::kMinCard;
}

std::string FormatCost(double v, CostMode mode) {
  std::ostringstream os;
  if (mode == CostMode::kMinCard) {
    os << static_cast<long long>(v);
  } else {
    os << std::setprecision(6) << v;
  }
  return os.str();
}

void AppendCsv(const std::string& path, const BenchRow& row) {
  const bool fresh =
      !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream os(path, std::ios::app);
  if (!os) throw ConfigError("cannot write '" + path + "'");
  if (fresh) WriteBenchHeader(os);
  WriteBenchRow(os, row);
}

// diagnose ------------------------------------------------------------------

struct DiagnoseArgs {
  std::string file;
  std::string algo = "rbfhs";
  std::string ld = "all";
  std::string mode;
  std::string switch_spec;
  std::string metrics;
  bool verify = false;
};

int Diagnose(const DiagnoseArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.switch_spec.empty() && a.algo != "hbfhs")
    throw ConfigError("--switch only applies to --algo hbfhs");
  const std::size_t ld = ParseLd(a.ld);
  SwitchCriterion criterion = NodeCount{100};
  if (!a.switch_spec.empty()) criterion = ParseSwitch(a.switch_spec);

  const Dpi dpi = LoadDpi(a.file);
  const CostMode mode = DefaultMode(dpi, a.mode);
  const CostModel model = MakeCostModel(dpi, mode);
  SearchOptions options;
  options.verify = a.verify;
  const SearchResult result =
      RunSearch(kAlgorithms.at(a.algo), dpi, model, ld, criterion, options);

  for (const auto& d : result.diagnoses) {
    out << Join(dpi.names_of(d)) << '\t'
        << FormatCost(model.display_value(d), mode) << '\n';
  }
  if (!a.metrics.empty()) {
    BenchRow row;
    row.scenario = a.file;
    row.algorithm = a.algo;
    row.ld = ld == kAllDiagnoses ? 0 : ld;
    row.mode = ToString(mode);
    row.selector = "-";
    row.time_ms = result.metrics.wall_time_ms;
    row.peak_nodes = result.metrics.peak_stored_nodes;
    row.conflicts_computed = result.metrics.conflicts_computed;
    AppendCsv(a.metrics, row);
  }
  if (result.diagnoses.empty()) {
    err << "no diagnosis exists: the background alone violates the measurements\n";
    return kNoDiagnosis;
  }
  return kOk;
}

// sequential ----------------------------------------------------------------

struct SequentialArgs {
  std::string file;
  std::string actual;
  bool interactive = false;
  std::string selector = "spl";
  std::string algo = "rbfhs";
  std::size_t ld = 6;
  std::string mode;
  std::string switch_spec;
};

int Sequential(const SequentialArgs& a, std::ostream& out, std::ostream& err,
               std::istream& in) {
  if (a.interactive == !a.actual.empty())
    throw ConfigError("give exactly one of --actual and --interactive");
  if (!a.switch_spec.empty() && a.algo != "hbfhs")
    throw ConfigError("--switch only applies to --algo hbfhs");

  const Dpi dpi = LoadDpi(a.file);
  SessionConfig config;
  config.ld = a.ld;
  config.selector = kSelectors.at(a.selector);
  config.algorithm = kAlgorithms.at(a.algo);
  config.mode = DefaultMode(dpi, a.mode);
  if (!a.switch_spec.empty()) config.criterion = ParseSwitch(a.switch_spec);

  SessionResult result;
  if (a.interactive) {
    ProbeOracle ask = [&](const std::string& component) {
      for (;;) {
        err << "is " << component << " faulty? [y/n] " << std::flush;
        std::string line;
        if (!std::getline(in, line))
          throw ConfigError("input ended before the session finished");
        if (line == "y" || line == "yes") return true;
        if (line == "n" || line == "no") return false;
      }
    };
    result = RunSession(dpi, ask, config);
  } else {
    ComponentSet actual = dpi.ids_of(Split(a.actual, ','));
    result = RunSession(dpi, actual, config);
  }

  for (const auto& record : result.log) WriteTranscriptLine(out, record);
  if (result.failed) {
    err << "session failed: " << result.failure << '\n';
    return kFailure;
  }
  out << Join(result.final_diagnosis) << '\n';
  return kOk;
}

// gen -----------------------------------------------------------------------

struct GenArgs {
  GeneratorParams params;
  std::string mode = "explicit";
  std::string out;
};

int Gen(GenArgs a, std::ostream& out) {
  a.params.mode = kGenModes.at(a.mode);
  const Dpi dpi = GenerateRandomDpi(a.params);
  if (a.out.empty() || a.out == "-") {
    out << SerializeDpi(dpi);
  } else {
    SaveDpi(dpi, a.out);
  }
  return kOk;
}

// bench ---------------------------------------------------------------------

struct BenchArgs {
  std::size_t seeds = 10;
  std::vector<std::size_t> sizes = {10, 20, 30};
  std::vector<std::string> algos = {"hstree", "rbfhs", "hbfhs"};
  std::vector<std::size_t> lds = {2, 6, 10, 20};
  std::size_t conflicts = 6;
  std::size_t conflict_size_min = 2;
  std::size_t conflict_size_max = 4;
  std::string gen_mode = "explicit";
  std::string switch_spec = "nodecount:100";
  std::string out = "bench.csv";
  std::size_t threads = 1;
};

struct Scenario {
  std::string id;
  GeneratorParams params;
};

struct ScenarioResult {
  std::vector<BenchRow> rows;
  std::size_t min_conflicts = 0;
  std::size_t failures = 0;
};

ScenarioResult RunScenario(const Scenario& s, const BenchArgs& a,
                           const SwitchCriterion& criterion) {
  ScenarioResult r;
  const Dpi dpi = GenerateRandomDpi(s.params);
  if (const auto* ec = std::get_if<ExplicitConflicts>(&dpi.backend())) {
    r.min_conflicts = ec->conflicts.size();
  } else if (dpi.size() <= kBruteForceLimit) {
    r.min_conflicts = BruteForceMinConflicts(dpi).size();
  }
  std::mt19937_64 rng(s.params.seed ^ 0x9e3779b97f4a7c15ULL);
  const ComponentSet actual = RandomMinimalDiagnosis(dpi, rng);

  for (const auto& algo : a.algos) {
    for (std::size_t ld : a.lds) {
      for (const auto& [mode_name, mode] : kModes) {
        for (const auto& [sel_name, selector] : kSelectors) {
          SessionConfig config;
          config.ld = ld;
          config.selector = selector;
          config.algorithm = kAlgorithms.at(algo);
          config.mode = mode;
          config.criterion = criterion;
          SessionResult session = RunSession(dpi, actual, config);
          if (session.failed ||
              dpi.ids_of(session.final_diagnosis) != actual) {
            ++r.failures;
          }
          BenchRow row;
          row.scenario = s.id;
          row.algorithm = algo;
          row.ld = ld;
          row.mode = mode_name;
          row.selector = sel_name;
          row.time_ms = session.search_time_ms;
          row.peak_nodes = session.peak_stored_nodes;
          row.conflicts_computed = session.conflicts_computed;
          r.rows.push_back(row);
        }
      }
    }
  }
  return r;
}

void WriteMemoryReport(const std::vector<Scenario>& scenarios,
                       const std::vector<ScenarioResult>& results,
                       std::ostream& out) {
  // Memory factor = HS-Tree peak / RBF-HS peak for the same grid cell.
  double min_f = 0, max_f = 0, sum_f = 0;
  std::size_t n = 0, n_large = 0, above_one_large = 0;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    std::map<std::string, std::size_t> hs;
    for (const auto& row : results[i].rows) {
      const std::string cell = std::to_string(row.ld) + "/" + row.mode + "/" +
                               row.selector;
      if (row.algorithm == "hstree") hs[cell] = row.peak_nodes;
    }
    for (const auto& row : results[i].rows) {
      if (row.algorithm != "rbfhs") continue;
      const std::string cell = std::to_string(row.ld) + "/" + row.mode + "/" +
                               row.selector;
      auto it = hs.find(cell);
      if (it == hs.end() || row.peak_nodes == 0) continue;
      const double f = static_cast<double>(it->second) / row.peak_nodes;
      min_f = n ? std::min(min_f, f) : f;
      max_f = n ? std::max(max_f, f) : f;
      sum_f += f;
      ++n;
      if (results[i].min_conflicts >= 4) {
        ++n_large;
        if (f > 1) ++above_one_large;
      }
    }
  }
  if (n == 0) {
    out << "memory factor: not computed (needs both hstree and rbfhs)\n";
    return;
  }
  out << std::fixed << std::setprecision(2) << "memory factor (hstree/rbfhs peak): min "
      << min_f << " avg " << sum_f / n << " max " << max_f << " over " << n
      << " cells\n";
  out << "cells with >= 4 minimal conflicts: " << n_large
      << ", memory factor > 1 in " << above_one_large << '\n';
}

int Bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  if (a.seeds == 0 || a.sizes.empty() || a.algos.empty() || a.threads == 0)
    throw ConfigError("bench needs seeds, sizes, algos and threads > 0");
  for (const auto& algo : a.algos) {
    if (!kAlgorithms.count(algo)) throw ConfigError("unknown algorithm '" + algo + "'");
  }
  const SwitchCriterion criterion = ParseSwitch(a.switch_spec);

  std::vector<Scenario> scenarios;
  for (std::size_t size : a.sizes) {
    for (std::size_t seed = 1; seed <= a.seeds; ++seed) {
      Scenario s;
      s.params.seed = seed;
      s.params.num_components = size;
      s.params.conflict_count = a.conflicts;
      s.params.conflict_size_min = a.conflict_size_min;
      s.params.conflict_size_max = std::min(a.conflict_size_max, size);
      s.params.mode = kGenModes.at(a.gen_mode);
      s.id = a.gen_mode + "-k" + std::to_string(size) + "-s" + std::to_string(seed);
      GenerateRandomDpi(s.params);  // surfaces config errors up front
      scenarios.push_back(std::move(s));
    }
  }

  std::vector<ScenarioResult> results(scenarios.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::string first_error;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < scenarios.size();) {
      try {
        results[i] = RunScenario(scenarios[i], a, criterion);
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (first_error.empty()) first_error = scenarios[i].id + ": " + e.what();
      }
    }
  };
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(a.threads, scenarios.size()); ++t)
    pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  const double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  if (!first_error.empty()) throw Error(first_error);

  std::ofstream csv(a.out);
  if (!csv) throw ConfigError("cannot write '" + a.out + "'");
  WriteBenchHeader(csv);
  std::size_t failures = 0, rows = 0;
  for (const auto& r : results) {
    for (const auto& row : r.rows) WriteBenchRow(csv, row);
    rows += r.rows.size();
    failures += r.failures;
  }
  out << "scenarios " << scenarios.size() << ", sessions " << rows
      << ", failed sessions " << failures << ", wall " << std::fixed
      << std::setprecision(2) << elapsed << " s\n";
  WriteMemoryReport(scenarios, results, out);
  out << "csv written to " << a.out << '\n';
  if (failures) {
    err << failures << " sessions did not recover the actual diagnosis\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, std::istream& in) {
  CLI::App app{"Model-based diagnosis: hitting-set search and sequential sessions",
               "mbd"};
  app.require_subcommand(1);

  DiagnoseArgs d;
  auto* diagnose = app.add_subcommand("diagnose", "Compute minimal diagnoses");
  diagnose->add_option("file", d.file, "DPI JSON file")->required();
  diagnose->add_option("--algo", d.algo)->check(CLI::IsMember(Keys(kAlgorithms)))
      ->capture_default_str();
  diagnose->add_option("--ld", d.ld, "number of leading diagnoses, or 'all'")
      ->capture_default_str();
  diagnose->add_option("--mode", d.mode,
                       "default: maxprob when probabilities are given")
      ->check(CLI::IsMember(Keys(kModes)));
  diagnose->add_option("--switch", d.switch_spec,
                       "hbfhs only: nodecount:N or memfrac:F[:BUDGET]");
  diagnose->add_option("--metrics", d.metrics, "append a metrics row to this CSV");
  diagnose->add_flag("--verify", d.verify, "check search invariants at runtime");

  SequentialArgs s;
  auto* sequential =
      app.add_subcommand("sequential", "Run a sequential diagnosis session");
  sequential->add_option("file", s.file, "DPI JSON file")->required();
  auto* actual = sequential->add_option("--actual", s.actual,
                                        "comma-separated actual diagnosis");
  auto* interactive = sequential->add_flag("--interactive", s.interactive,
                                           "answer probes on stdin (y/n)");
  actual->excludes(interactive);
  sequential->add_option("--selector", s.selector)
      ->check(CLI::IsMember(Keys(kSelectors)))->capture_default_str();
  sequential->add_option("--algo", s.algo)->check(CLI::IsMember(Keys(kAlgorithms)))
      ->capture_default_str();
  sequential->add_option("--ld", s.ld)->check(CLI::PositiveNumber)
      ->capture_default_str();
  sequential->add_option("--mode", s.mode)->check(CLI::IsMember(Keys(kModes)));
  sequential->add_option("--switch", s.switch_spec);

  GenArgs g;
  auto* gen = app.add_subcommand("gen", "Generate a random DPI");
  gen->add_option("out", g.out, "output JSON file (stdout if omitted)");
  gen->add_option("--seed", g.params.seed)->capture_default_str();
  gen->add_option("--components", g.params.num_components)->capture_default_str();
  gen->add_option("--conflicts", g.params.conflict_count)->capture_default_str();
  gen->add_option("--size-min", g.params.conflict_size_min)->capture_default_str();
  gen->add_option("--size-max", g.params.conflict_size_max)->capture_default_str();
  gen->add_option("--pr-min", g.params.pr_min)->capture_default_str();
  gen->add_option("--pr-max", g.params.pr_max)->capture_default_str();
  gen->add_option("--mode", g.mode)->check(CLI::IsMember(Keys(kGenModes)))
      ->capture_default_str();
  gen->add_option("--variables", g.params.num_variables)->capture_default_str();
  gen->add_option("--max-min-conflicts", g.params.max_minimal_conflicts)
      ->capture_default_str();

  BenchArgs b;
  auto* bench = app.add_subcommand("bench", "Run the benchmark grid");
  bench->add_option("--seeds", b.seeds, "seeds 1..N per size")->capture_default_str();
  bench->add_option("--sizes", b.sizes, "component counts")->delimiter(',')
      ->capture_default_str();
  bench->add_option("--algos", b.algos)->delimiter(',')->capture_default_str();
  bench->add_option("--lds", b.lds)->delimiter(',')->capture_default_str();
  bench->add_option("--conflicts", b.conflicts)->capture_default_str();
  bench->add_option("--size-min", b.conflict_size_min)->capture_default_str();
  bench->add_option("--size-max", b.conflict_size_max)->capture_default_str();
  bench->add_option("--gen-mode", b.gen_mode)->check(CLI::IsMember(Keys(kGenModes)))
      ->capture_default_str();
  bench->add_option("--switch", b.switch_spec)->capture_default_str();
  bench->add_option("--out", b.out)->capture_default_str();
  bench->add_option("--threads", b.threads)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  try {
    if (*diagnose) return Diagnose(d, out, err);
    if (*sequential) return Sequential(s, out, err, in);
    if (*gen) return Gen(g, out);
    if (*bench) return Bench(b, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace mbd::cli
