// Command-line front end: computes baseline and limited-exposure
// equilibria, sweeps the exposure grid, runs the indoctrination process,
// and certifies profiles with the brute-force oracle. Data goes to
// stdout (json or csv), diagnostics to stderr.
//
// Exit codes: 0 success, 1 usage error, 2 solver failure,
// 3 failed certification (verify only).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "indoc/core.hpp"
#include "indoc/dynamics.hpp"
#include "indoc/equilibrium.hpp"
#include "indoc/limited_exposure.hpp"
#include "indoc/verification.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSolver = 2;
constexpr int kExitNotCertified = 3;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<double> parse_doubles(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

// "start:stop:steps"
std::vector<double> parse_grid(const std::string& spec) {
  std::stringstream ss(spec);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c, ':'))
    throw std::invalid_argument("grid must be start:stop:steps");
  return indoc::default_sweep_grid(std::stod(a), std::stod(b),
                                   static_cast<std::size_t>(std::stoul(c)));
}

struct CommonOpts {
  std::string opinions = "0,1,2";
  std::string sizes = "1,1,1";
  double tol = 1e-12;
  std::size_t max_iter = 1000000;
  std::string format = "json";
};

int run_equilibrium(const CommonOpts& opts) {
  const indoc::OpinionConfig config(parse_doubles(opts.opinions), parse_ints(opts.sizes));
  const auto eq = indoc::solve_baseline(config);
  if (opts.format == "csv") {
    std::cout << "opinion,size,aggregate,symmetric_effort,payoff\n";
    std::size_t player = 0;
    for (std::size_t i = 0; i < config.num_opinions(); ++i) {
      std::cout << fmt(config.opinions[i]) << ',' << config.sizes[i] << ','
                << fmt(eq.aggregates.values[i]) << ','
                << fmt(eq.symmetric_profile.efforts[player]) << ','
                << fmt(eq.per_opinion_payoff[i]) << '\n';
      player += config.sizes[i];
    }
  } else {
    json out;
    out["opinions"] = config.opinions;
    out["sizes"] = config.sizes;
    out["aggregates"] = eq.aggregates.values;
    out["symmetric_efforts"] = eq.symmetric_profile.efforts;
    out["payoffs"] = eq.per_opinion_payoff;
    std::cout << out.dump(2) << '\n';
  }
  return kExitOk;
}

json limited_json(const indoc::LimitedEquilibrium& eq) {
  json out;
  out["delta"] = eq.delta.delta;
  out["w"] = eq.w;
  out["e1"] = eq.e1;
  out["e2"] = eq.e2;
  out["e3"] = eq.e3;
  out["r_star"] = eq.r_star;
  out["polarization"] = indoc::polarization_reduced(eq.w).value;
  return out;
}

int run_limited(double delta, const CommonOpts& opts) {
  const auto eq = indoc::solve_equilibrium(indoc::ExposureLevel(delta), opts.tol);
  if (opts.format == "csv") {
    std::cout << "delta,w,e1,e2,e3,r_star,polarization\n"
              << fmt(eq.delta.delta) << ',' << fmt(eq.w) << ',' << fmt(eq.e1) << ','
              << fmt(eq.e2) << ',' << fmt(eq.e3) << ',' << fmt(eq.r_star) << ','
              << fmt(indoc::polarization_reduced(eq.w).value) << '\n';
  } else {
    std::cout << limited_json(eq).dump(2) << '\n';
  }
  return kExitOk;
}

int run_sweep(const std::string& grid_spec, const CommonOpts& opts) {
  const auto rows = indoc::sweep(parse_grid(grid_spec), opts.tol);
  if (opts.format == "csv") {
    std::cout << "delta,w,e1,e2,polarization\n";
    for (const auto& r : rows)
      std::cout << fmt(r.delta) << ',' << fmt(r.w) << ',' << fmt(r.e1) << ',' << fmt(r.e2)
                << ',' << fmt(r.polarization) << '\n';
  } else {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"delta", r.delta},
                     {"w", r.w},
                     {"e1", r.e1},
                     {"e2", r.e2},
                     {"polarization", r.polarization}});
    std::cout << out.dump(2) << '\n';
  }
  return kExitOk;
}

int run_process(double delta, const std::string& pi0_spec, const CommonOpts& opts) {
  const auto pi0_vals = parse_doubles(pi0_spec);
  if (pi0_vals.size() != 3) throw std::invalid_argument("--pi0 needs three entries");
  const indoc::OpinionDistribution pi0({pi0_vals[0], pi0_vals[1], pi0_vals[2]});
  const indoc::ExposureLevel d(delta);
  const auto result = indoc::iterate_to_stationary(pi0, d, opts.tol, opts.max_iter);
  const auto closed = indoc::stationary_closed_form(d);
  double l1 = 0.0;
  for (std::size_t j = 0; j < 3; ++j)
    l1 += std::abs(result.distribution.probs[j] - closed.probs[j]);
  if (opts.format == "csv") {
    std::cout << "delta,pi1,pi2,pi3,iterations,closed_form_l1_diff\n"
              << fmt(delta) << ',' << fmt(result.distribution.probs[0]) << ','
              << fmt(result.distribution.probs[1]) << ','
              << fmt(result.distribution.probs[2]) << ',' << result.iterations << ','
              << fmt(l1) << '\n';
  } else {
    json out;
    out["delta"] = delta;
    out["pi"] = result.distribution.probs;
    out["iterations"] = result.iterations;
    out["pi_closed_form"] = closed.probs;
    out["closed_form_l1_diff"] = l1;
    std::cout << out.dump(2) << '\n';
  }
  return kExitOk;
}

int emit_certification(const std::vector<indoc::DeviationReport>& reports, double ctol,
                       const CommonOpts& opts) {
  const bool ok = indoc::certified(reports, ctol);
  if (opts.format == "csv") {
    std::cout << "player,current_effort,best_effort,payoff_gain\n";
    for (const auto& r : reports)
      std::cout << r.player << ',' << fmt(r.current_effort) << ',' << fmt(r.best_effort)
                << ',' << fmt(r.payoff_gain) << '\n';
  } else {
    json out;
    out["certified"] = ok;
    out["max_gain"] = indoc::max_deviation_gain(reports);
    json rows = json::array();
    for (const auto& r : reports)
      rows.push_back({{"player", r.player},
                      {"current_effort", r.current_effort},
                      {"best_effort", r.best_effort},
                      {"payoff_gain", r.payoff_gain}});
    out["reports"] = rows;
    std::cout << out.dump(2) << '\n';
  }
  if (!ok) {
    std::cerr << "verify: profile not certified (max gain "
              << fmt(indoc::max_deviation_gain(reports)) << ")\n";
    return kExitNotCertified;
  }
  return kExitOk;
}

// Certifies either an explicit profile or a previously emitted JSON
// result (from `equilibrium` or `limited`).
int run_verify(const std::string& input_path, const std::string& efforts_spec,
               std::optional<double> delta, double ctol, const CommonOpts& opts) {
  std::optional<indoc::ExposureLevel> exposure;
  if (delta) exposure.emplace(*delta);

  if (!input_path.empty()) {
    std::ifstream in(input_path);
    if (!in) throw std::invalid_argument("verify: cannot open " + input_path);
    const json doc = json::parse(in);
    if (doc.contains("symmetric_efforts")) {
      const indoc::OpinionConfig config(doc.at("opinions").get<std::vector<double>>(),
                                        doc.at("sizes").get<std::vector<int>>());
      const auto profile = indoc::EffortProfile::from_group_order(
          config, doc.at("symmetric_efforts").get<std::vector<double>>());
      return emit_certification(indoc::certify_equilibrium(profile, config), ctol, opts);
    }
    if (doc.contains("e1")) {
      const auto config = indoc::limited_config();
      const auto profile = indoc::EffortProfile::from_group_order(
          config, {doc.at("e1").get<double>(), doc.at("e2").get<double>(),
                   doc.at("e3").get<double>()});
      const indoc::ExposureLevel d(doc.at("delta").get<double>());
      return emit_certification(indoc::certify_equilibrium(profile, config, d), ctol, opts);
    }
    throw std::invalid_argument("verify: unrecognized input document");
  }

  const indoc::OpinionConfig config(parse_doubles(opts.opinions), parse_ints(opts.sizes));
  indoc::EffortProfile profile =
      efforts_spec.empty()
          ? (exposure ? indoc::EffortProfile::from_group_order(
                            config, [&] {
                              const auto eq = indoc::solve_equilibrium(*exposure, opts.tol);
                              return std::vector<double>{eq.e1, eq.e2, eq.e3};
                            }())
                      : indoc::symmetric_equilibrium(config))
          : indoc::EffortProfile::from_group_order(config, parse_doubles(efforts_spec));
  return emit_certification(indoc::certify_equilibrium(profile, config, exposure), ctol,
                            opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indoctrination-contest solver and simulator"};
  app.require_subcommand(1);

  CommonOpts opts;
  double delta = 0.5;
  std::string grid_spec = "0.01:1:100";
  std::string pi0_spec = "0.333333333333333,0.333333333333333,0.333333333333334";
  std::string input_path;
  std::string efforts_spec;
  double ctol = 1e-6;
  bool has_delta = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tol", opts.tol, "Solver tolerance");
    cmd->add_option("--max-iter", opts.max_iter, "Iteration cap");
    cmd->add_option("--format", opts.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* eq_cmd = app.add_subcommand("equilibrium", "Baseline full-monitoring equilibrium");
  eq_cmd->add_option("--opinions", opts.opinions, "Comma-separated opinion values");
  eq_cmd->add_option("--sizes", opts.sizes, "Comma-separated group sizes");
  add_common(eq_cmd);

  auto* lim_cmd = app.add_subcommand("limited", "Limited-exposure equilibrium at delta");
  lim_cmd->add_option("--delta", delta, "Exposure level in (0,1]")->required();
  add_common(lim_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Equilibrium sweep over a delta grid");
  sweep_cmd->add_option("--grid", grid_spec, "Grid as start:stop:steps");
  add_common(sweep_cmd);

  auto* proc_cmd = app.add_subcommand("process", "Indoctrination process to stationarity");
  proc_cmd->add_option("--delta", delta, "Exposure level in (0,1)")->required();
  proc_cmd->add_option("--pi0", pi0_spec, "Initial distribution, three entries");
  add_common(proc_cmd);

  auto* ver_cmd = app.add_subcommand("verify", "Certify a profile with the oracle");
  ver_cmd->add_option("--input", input_path, "JSON output of equilibrium/limited to re-check");
  ver_cmd->add_option("--opinions", opts.opinions, "Comma-separated opinion values");
  ver_cmd->add_option("--sizes", opts.sizes, "Comma-separated group sizes");
  ver_cmd->add_option("--efforts", efforts_spec, "Explicit per-player efforts");
  ver_cmd->add_option("--delta", delta, "Exposure level (limited game)")
      ->each([&](const std::string&) { has_delta = true; });
  ver_cmd->add_option("--ctol", ctol, "Certification tolerance on payoff gain");
  add_common(ver_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eq_cmd->parsed()) return run_equilibrium(opts);
    if (lim_cmd->parsed()) return run_limited(delta, opts);
    if (sweep_cmd->parsed()) return run_sweep(grid_spec, opts);
    if (proc_cmd->parsed()) return run_process(delta, pi0_spec, opts);
    if (ver_cmd->parsed())
      return run_verify(input_path, efforts_spec,
                        has_delta ? std::optional<double>(delta) : std::nullopt, ctol, opts);
  } catch (const indoc::SolverError& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kExitSolver;
  } catch (const indoc::NullDebateError& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
