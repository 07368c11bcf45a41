#pragma once

// Batch front end shared by tools/ekrlab.cpp and the tests.
//
// Reports are JSON objects with sorted keys. Counts and other exact
// integers in report bodies are decimal strings; reals carry at most 15
// significant digits. Every report echoes the resolved configuration under
// "config". `sweep` defaults to CSV with a header row.
//
// Exit codes: 0 success, 2 usage or validation error, 3 budget exhausted.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bounds.hpp"
#include "budget.hpp"
#include "enumeration.hpp"
#include "hypergraph.hpp"
#include "intersection.hpp"
#include "permutation.hpp"
#include "random.hpp"
#include "spectral.hpp"
#include "subspace.hpp"

namespace ekrlab::cli {

using json = nlohmann::json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_budget = 3;

inline std::string describe(const std::string& name) {
  static const std::map<std::string, std::string> text{
      {"count", "number of intersecting families, optionally by size"},
      {"maximal", "maximal families and their generating sets"},
      {"extremal", "largest family and largest non-trivial family"},
      {"trivial-count", "number of trivial families"},
      {"spectral", "Kneser spectrum, mixing and supersaturation checks"},
      {"containers", "container fingerprints for the maximal families"},
      {"bounds", "closed-form thresholds and conditions"},
      {"random", "largest intersecting family in p-random samples"},
      {"sweep", "random over a grid of p"}};
  const auto it = text.find(name);
  return it == text.end() ? std::string{} : it->second;
}

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"count",      "maximal", "extremal", "trivial-count", "spectral",
                                              "containers", "bounds",  "random",   "sweep"};
  return names;
}

struct RunConfig {
  std::string subcommand;
  std::string setting = "hypergraph";
  int n = 0;
  int k = 0;
  int t = 1;
  int q = 2;
  double epsilon = 0.5;
  double p = 1.0;
  std::vector<double> p_grid;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::string format = "json";
  unsigned threads = 1;
  std::uint64_t budget_ms = 60000;
  std::uint64_t node_limit = 0;  // 0 = unlimited
  bool by_size = false;
  std::uint64_t limit = 50;  // families listed by `maximal`

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Rounds to 15 significant digits; non-finite values become null.
inline json real(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

inline json exact(const BigCount& v) { return to_decimal(v); }
inline json exact(std::uint64_t v) { return std::to_string(v); }
inline json exact(std::int64_t v) { return std::to_string(v); }

inline json to_json(const RunConfig& c) {
  return json{{"subcommand", c.subcommand}, {"setting", c.setting},     {"n", c.n},
              {"k", c.k},                   {"t", c.t},                 {"q", c.q},
              {"epsilon", real(c.epsilon)}, {"p", real(c.p)},           {"p_grid", c.p_grid},
              {"trials", c.trials},         {"seed", c.seed},           {"format", c.format},
              {"threads", c.threads},       {"budget_ms", c.budget_ms}, {"node_limit", c.node_limit},
              {"by_size", c.by_size},       {"limit", c.limit}};
}

inline void validate(const RunConfig& c) {
  auto fail = [](const std::string& m) { throw std::invalid_argument(m); };
  bool known = false;
  for (const auto& s : subcommands()) known = known || s == c.subcommand;
  if (!known) fail("unknown subcommand '" + c.subcommand + "'");
  if (c.setting != "hypergraph" && c.setting != "permutation" && c.setting != "subspace")
    fail("--setting must be hypergraph, permutation or subspace");
  if (c.format != "json" && c.format != "csv") fail("--format must be json or csv");
  if (c.format == "csv" && c.subcommand != "sweep") fail("--format csv is only available for sweep");
  if (c.threads < 1 || c.threads > 256) fail("--threads must lie in [1, 256]");
  if (!(c.p >= 0 && c.p <= 1)) fail("--p must lie in [0, 1]");
  for (double p : c.p_grid)
    if (!(p >= 0 && p <= 1)) fail("--p-grid values must lie in [0, 1]");
  if (!(c.epsilon > 0)) fail("--epsilon must be positive");
  if (c.trials < 1 || c.trials > 1000000) fail("--trials must lie in [1, 10^6]");
  if (c.budget_ms < 1) fail("--budget-ms must be positive");

  if (c.setting == "hypergraph") {
    if (!(1 <= c.t && c.t <= c.k && c.k <= c.n && c.n <= max_hypergraph_n))
      fail("hypergraph needs 1 <= t <= k <= n <= 30");
  } else if (c.setting == "permutation") {
    if (!(1 <= c.t && c.t <= c.n && c.n <= max_permutation_n)) fail("permutation needs 1 <= t <= n <= 8");
  } else {
    if (c.t != 1) fail("subspace families are 1-intersecting: use --t 1");
    if (!is_prime(c.q)) fail("--q must be prime");
    if (!(1 <= c.k && c.k <= c.n && c.n <= 30)) fail("subspace needs 1 <= k <= n");
  }
  const bool kneser = c.subcommand == "spectral" || c.subcommand == "containers";
  if (kneser && (c.setting != "hypergraph" || c.t != 1)) fail(c.subcommand + " works on hypergraph settings with t = 1");
  if (c.subcommand == "sweep" && c.p_grid.empty()) fail("sweep needs --p-grid");
}

inline RunConfig config_from_json(const json& j) {
  RunConfig c;
  c.subcommand = j.at("subcommand").get<std::string>();
  c.setting = j.at("setting").get<std::string>();
  c.n = j.at("n").get<int>();
  c.k = j.at("k").get<int>();
  c.t = j.at("t").get<int>();
  c.q = j.at("q").get<int>();
  c.epsilon = j.at("epsilon").get<double>();
  c.p = j.at("p").get<double>();
  c.p_grid = j.at("p_grid").get<std::vector<double>>();
  c.trials = j.at("trials").get<std::uint64_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.format = j.at("format").get<std::string>();
  c.threads = j.at("threads").get<unsigned>();
  c.budget_ms = j.at("budget_ms").get<std::uint64_t>();
  c.node_limit = j.at("node_limit").get<std::uint64_t>();
  c.by_size = j.at("by_size").get<bool>();
  c.limit = j.at("limit").get<std::uint64_t>();
  validate(c);
  return c;
}

using AnySetting = std::variant<HypergraphSetting, PermutationSetting, SubspaceSetting>;

inline AnySetting make_setting(const RunConfig& c) {
  if (c.setting == "hypergraph") return HypergraphSetting(c.n, c.k, c.t);
  if (c.setting == "permutation") return PermutationSetting(c.n, c.t);
  return SubspaceSetting(c.n, c.k, c.q);
}

inline Budget make_budget(const RunConfig& c) {
  const auto nodes = c.node_limit ? c.node_limit : std::numeric_limits<std::uint64_t>::max();
  return Budget(nodes, std::chrono::milliseconds(c.budget_ms));
}

inline std::optional<BoundsReport> bounds_for(const RunConfig& c) {
  try {
    if (c.setting == "hypergraph") return hypergraph_bounds(c.n, c.k, c.t);
    if (c.setting == "permutation") return permutation_bounds(c.n, c.t);
    return subspace_bounds(c.n, c.k, c.q);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

template <Setting S>
json family_json(const S& s, const Family& f) {
  json members = json::array();
  f.for_each([&](std::size_t r) { members.push_back(s.label(r)); });
  const auto tv = triviality(s, f);
  return json{{"size", exact(static_cast<std::uint64_t>(f.count()))}, {"trivial", tv.trivial}, {"members", members}};
}

inline json bounds_json(const BoundsReport& b) {
  json j{{"N0", exact(b.N0)},
         {"N2", exact(b.N2)},
         {"T", exact(b.T)},
         {"N1_upper", real(b.N1_upper)},
         {"N1_asymptotic_reference", b.N1_asymptotic},
         {"logM_upper", real(b.logM_upper)},
         {"cond_allsizes", real(b.cond_allsizes)},
         {"cond_union", real(b.cond_union)}};
  j["N1"] = b.N1_exact ? exact(*b.N1_exact) : json(nullptr);
  j["eta"] = b.eta ? real(*b.eta) : json(nullptr);
  j["ekr_threshold"] = b.ekr_threshold ? exact(*b.ekr_threshold) : json(nullptr);
  if (b.N0 < 4096 && b.N2 <= b.N0) {
    const auto w = bonferroni_window(b.T, b.N0.convert_to<std::uint64_t>(), b.N2.convert_to<std::uint64_t>());
    j["bonferroni_lower"] = exact(w.first);
    j["bonferroni_upper"] = exact(w.second);
  }
  return j;
}

// --- subcommands -----------------------------------------------------------

template <Setting S>
json run_count(const RunConfig& c, const S& s, Budget& budget) {
  const auto poly = count_families(s, c.by_size, budget);
  json j{{"ground_size", exact(static_cast<std::uint64_t>(s.size()))},
         {"total", exact(poly.total())},
         {"provenance", {{"total", "enumeration"}}}};
  if (c.by_size) {
    json coeffs = json::array();
    for (const auto& v : poly.coefficients) coeffs.push_back(exact(v));
    j["polynomial"] = coeffs;
    j["provenance"]["polynomial"] = "enumeration";
  }
  return j;
}

template <Setting S>
json run_maximal(const RunConfig& c, const S& s, Budget& budget) {
  const auto fams = enumerate_maximal(s, budget);
  std::map<std::size_t, std::uint64_t> hist;
  std::uint64_t trivial = 0;
  std::size_t largest_generating = 0;
  bool bound_ok = true, skew_ok = true;
  json listed = json::array();
  for (const auto& f : fams) {
    ++hist[f.count()];
    trivial += is_trivial(s, f);
    const auto gs = minimal_generating_set(s, f);
    largest_generating = std::max(largest_generating, gs.generator_list.size());
    bound_ok = bound_ok && gs.generator_list.size() <= s.generating_set_bound();
    skew_ok = skew_ok && witnesses_are_skew(s, gs);
    if (listed.size() < c.limit) {
      json fj = family_json(s, f);
      json gens = json::array();
      for (auto g : gs.generator_list) gens.push_back(s.label(g));
      fj["generators"] = gens;
      listed.push_back(fj);
    }
  }
  json sizes = json::object();
  for (const auto& [size, count] : hist) sizes[std::to_string(size)] = exact(count);
  return json{{"count", exact(static_cast<std::uint64_t>(fams.size()))},
              {"trivial_count", exact(trivial)},
              {"size_histogram", sizes},
              {"families", listed},
              {"largest_generating_set", exact(static_cast<std::uint64_t>(largest_generating))},
              {"generating_set_bound", exact(s.generating_set_bound())},
              {"generating_sets_within_bound", bound_ok},
              {"witnesses_skew", skew_ok},
              {"provenance", {{"count", "enumeration"}, {"generating_set_bound", "formula"}}}};
}

template <Setting S>
json run_extremal(const RunConfig& c, const S& s, Budget& budget) {
  const auto g = build_conflict_graph(s);
  const auto best = max_family(g, budget);
  const auto nt = max_nontrivial_family(g, budget);
  json j{{"max_size", exact(static_cast<std::uint64_t>(best.size))},
         {"max_witness", family_json(s, g.to_family(best.vertices))},
         {"max_nontrivial_size", exact(static_cast<std::uint64_t>(nt ? nt->size : 0))},
         {"provenance", {{"max_size", "enumeration"}, {"max_nontrivial_size", "enumeration"}}}};
  j["nontrivial_witness"] = nt ? family_json(s, g.to_family(nt->vertices)) : json(nullptr);
  if (const auto b = bounds_for(c)) {
    j["N0_formula"] = exact(b->N0);
    j["N1_formula"] = b->N1_exact ? exact(*b->N1_exact) : json(nullptr);
    j["provenance"]["N0_formula"] = "formula";
    j["provenance"]["N1_formula"] = "formula";
  }
  return j;
}

template <Setting S>
json run_trivial_count(const RunConfig& c, const S& s, Budget& budget) {
  const BigCount trivial = count_trivial(s, budget);
  json j{{"trivial", exact(trivial)},
         {"maximal_trivial_families", exact(static_cast<std::uint64_t>(s.trivial_cores().size()))},
         {"provenance", {{"trivial", s.kind() == SettingKind::hypergraph ? "formula" : "inclusion-exclusion"}}}};
  if (const auto b = bounds_for(c); b && b->N0 < 4096) {
    const auto w = bonferroni_window(b->T, b->N0.convert_to<std::uint64_t>(), b->N2.convert_to<std::uint64_t>());
    j["bonferroni_lower"] = exact(w.first);
    j["bonferroni_upper"] = exact(w.second);
    j["in_window"] = w.first <= trivial && trivial <= w.second;
  }
  return j;
}

inline json run_spectral(const RunConfig& c) {
  const auto r = spectral_report(c.n, c.k);
  return json{{"N", exact(r.vertices)},
              {"D", exact(r.degree)},
              {"lambda_min_closed", exact(r.lambda_min_closed)},
              {"lambda_min_numeric", real(r.lambda_min_numeric)},
              {"provenance", {{"lambda_min_closed", "formula"}, {"lambda_min_numeric", "enumeration"}}}};
}

inline json run_containers(const RunConfig& c, Budget& budget) {
  const auto cs = build_containers(c.n, c.k, c.epsilon, budget);
  const auto g = kneser_graph(c.n, c.k);
  Budget enum_budget = budget;
  bool covered = true;
  for (const auto& mis : maximal_independent_sets(g, enum_budget)) {
    bool inside = false;
    for (const auto& box : cs.containers) inside = inside || mis.is_subset_of(box);
    covered = covered && inside;
  }
  return json{{"R", real(cs.params.R)},
              {"beta", real(cs.params.beta)},
              {"ell", real(cs.params.ell)},
              {"epsilon_outside_proof_range", cs.params.epsilon_outside_proof_range},
              {"fingerprint_cap", exact(static_cast<std::uint64_t>(cs.fingerprint_cap))},
              {"containers", exact(static_cast<std::uint64_t>(cs.containers.size()))},
              {"largest_container", exact(static_cast<std::uint64_t>(cs.largest))},
              {"size_cap", real(cs.params.R + cs.params.ell)},
              {"within_size_cap", static_cast<double>(cs.largest) <= cs.params.R + cs.params.ell},
              {"covers_all_maximal", covered},
              {"log_count_upper", c.n >= 2 * c.k + 1 ? real(log_count_upper(c.n, c.k, c.epsilon)) : json(nullptr)},
              {"log_count_lower", exact(log_count_lower(c.n, c.k))},
              {"provenance", {{"containers", "enumeration"}, {"log_count_upper", "formula"}}}};
}

inline json run_bounds(const RunConfig& c) {
  const auto b = bounds_for(c);
  if (!b) throw std::invalid_argument("bounds: parameters outside the formulas' range");
  json j = bounds_json(*b);
  if (c.setting == "hypergraph") {
    j["H1_size"] = exact(h1_size(c.n, c.k, c.t));
    j["H2_size"] = exact(h2_size(c.n, c.k, c.t));
    if (c.k >= 3 && 4 * c.k <= c.n) {
      j["p0"] = real(p0_hypergraph(c.n, c.k));
      j["tau"] = real(tau_hypergraph(c.n, c.k, c.p));
    }
  }
  if (c.setting == "permutation") {
    j["random_threshold"] = real(permutation_threshold(c.n, c.t));
    j["union_bound_log2"] = real(permutation_union_bound_log2(c.n, c.t, c.p));
  }
  j["provenance"] = {{"all", "formula"}};
  return j;
}

/// Theorem-scale sparse threshold for the setting, when one exists.
inline std::optional<double> random_threshold(const RunConfig& c) {
  if (c.setting == "permutation" && c.t < c.n) return permutation_threshold(c.n, c.t);
  if (c.setting == "hypergraph" && c.t == 1 && c.k >= 3 && 4 * c.k <= c.n) return p0_hypergraph(c.n, c.k);
  return std::nullopt;
}

inline json summary_json(const ExperimentSummary& s) {
  return json{{"p", real(s.p)},
              {"trials", exact(static_cast<std::uint64_t>(s.trials))},
              {"trivial_trials", exact(static_cast<std::uint64_t>(s.trivial_trials))},
              {"empirical_probability", real(s.empirical_probability)},
              {"confidence_radius", real(s.confidence_radius)},
              {"mean_sample_size", real(s.mean_sample_size)},
              {"mean_max_size", real(s.mean_max_size)}};
}

template <Setting S>
json run_random(const RunConfig& c, const S& s, Budget& budget) {
  const auto sum = monte_carlo(s, c.p, c.trials, c.seed, c.threads, budget);
  json j = summary_json(sum);
  const auto thr = random_threshold(c);
  j["theorem_threshold"] = thr ? real(*thr) : json(nullptr);
  j["theorem_threshold_exceeds_one"] = thr ? json(*thr > 1) : json(nullptr);
  j["provenance"] = {{"empirical_probability", "enumeration"}, {"theorem_threshold", "formula"}};
  return j;
}

template <Setting S>
std::vector<ExperimentSummary> run_sweep_rows(const RunConfig& c, const S& s, Budget& budget) {
  std::vector<ExperimentSummary> rows;
  for (double p : c.p_grid) rows.push_back(monte_carlo(s, p, c.trials, c.seed, c.threads, budget));
  return rows;
}

inline std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

inline std::string sweep_csv(const std::vector<ExperimentSummary>& rows) {
  std::ostringstream out;
  out << "p,trials,trivial_trials,empirical_probability,confidence_radius,mean_sample_size,mean_max_size\n";
  for (const auto& r : rows)
    out << format_real(r.p) << ',' << r.trials << ',' << r.trivial_trials << ',' << format_real(r.empirical_probability)
        << ',' << format_real(r.confidence_radius) << ',' << format_real(r.mean_sample_size) << ','
        << format_real(r.mean_max_size) << '\n';
  return out.str();
}

/// Runs a validated configuration and writes the report.
inline void execute(const RunConfig& c, std::ostream& out) {
  validate(c);
  Budget budget = make_budget(c);
  json body;
  if (c.subcommand == "spectral") {
    body = run_spectral(c);
  } else if (c.subcommand == "containers") {
    body = run_containers(c, budget);
  } else if (c.subcommand == "bounds") {
    body = run_bounds(c);
  } else {
    const AnySetting setting = make_setting(c);
    if (c.subcommand == "sweep") {
      const auto rows = std::visit([&](const auto& s) { return run_sweep_rows(c, s, budget); }, setting);
      if (c.format == "csv") {
        out << "# config " << to_json(c).dump() << '\n' << sweep_csv(rows);
        return;
      }
      body = json{{"rows", json::array()}};
      for (const auto& r : rows) body["rows"].push_back(summary_json(r));
    } else {
      body = std::visit(
          [&](const auto& s) -> json {
            if (c.subcommand == "count") return run_count(c, s, budget);
            if (c.subcommand == "maximal") return run_maximal(c, s, budget);
            if (c.subcommand == "extremal") return run_extremal(c, s, budget);
            if (c.subcommand == "trivial-count") return run_trivial_count(c, s, budget);
            return run_random(c, s, budget);
          },
          setting);
    }
  }
  body["config"] = to_json(c);
  out << body.dump(2) << '\n';
}

/// Default time budget: EKRLAB_BUDGET_MS when set, else 60 s.
inline std::uint64_t default_budget_ms() {
  if (const char* env = std::getenv("EKRLAB_BUDGET_MS")) {
    char* end = nullptr;
    const long long ms = std::strtoll(env, &end, 10);
    if (end != env && ms > 0) return static_cast<std::uint64_t>(ms);
  }
  return 60000;
}

/// Parses argv into a RunConfig. Throws CLI::ParseError on bad usage.
inline RunConfig parse(int argc, const char* const* argv, CLI::App& app) {
  RunConfig c;
  c.budget_ms = default_budget_ms();
  app.require_subcommand(1);
  for (const auto& name : subcommands()) {
    auto* sub = app.add_subcommand(name, describe(name));
    sub->add_option("--setting", c.setting, "hypergraph | permutation | subspace")
        ->check(CLI::IsMember({"hypergraph", "permutation", "subspace"}));
    sub->add_option("--n", c.n, "ground size / degree / dimension")->required();
    sub->add_option("--k", c.k, "uniformity or subspace dimension");
    sub->add_option("--t", c.t, "required agreement");
    sub->add_option("--q", c.q, "field size (prime)");
    sub->add_option("--epsilon", c.epsilon, "container slack");
    sub->add_option("--p", c.p, "inclusion probability");
    sub->add_option("--p-grid", c.p_grid, "probabilities for sweep")->delimiter(',');
    sub->add_option("--trials", c.trials, "Monte Carlo trials");
    sub->add_option("--seed", c.seed, "master seed");
    sub->add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--threads", c.threads, "worker threads");
    sub->add_option("--budget-ms", c.budget_ms, "time budget in milliseconds");
    sub->add_option("--node-limit", c.node_limit, "search node budget (0 = unlimited)");
    sub->add_flag("--by-size", c.by_size, "report counts by family size");
    sub->add_option("--limit", c.limit, "families listed by maximal");
  }
  app.parse(argc, argv);
  for (auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();
  if (c.subcommand == "sweep" && app.get_subcommand("sweep")->count("--format") == 0) c.format = "csv";
  if (c.setting == "permutation" && c.k == 0) c.k = c.n;
  return c;
}

/// Full command-line run: parse, validate, execute, map errors to exit codes.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for intersecting families", "ekrlab"};
  RunConfig c;
  try {
    c = parse(argc, argv, app);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    err << e.what() << '\n' << app.help();
    return exit_invalid;
  }
  try {
    execute(c, out);
    return exit_ok;
  } catch (const budget_exceeded& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return exit_budget;
  } catch (const std::invalid_argument& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::out_of_range& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return exit_invalid;
  }
}

}  // namespace ekrlab::cli
