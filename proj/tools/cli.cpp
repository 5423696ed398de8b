// Copyright 2026 The uavalloc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <filesystem>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uavalloc/errors.hpp"
#include "uavalloc/harness.hpp"
#include "uavalloc/report_io.hpp"
#include "uavalloc/scenario.hpp"

namespace uavalloc::cli {

namespace {

using nlohmann::json;

void report_error(std::ostream& err, const char* kind, const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

std::vector<Scheme> parse_scheme_list(const std::string& text) {
  std::vector<Scheme> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all") {
      for (Scheme s : all_schemes())
        if (s != Scheme::kExhaustiveOracle) out.push_back(s);
    } else {
      out.push_back(parse_scheme(item));
    }
  }
  if (out.empty()) throw ValidationError("no scheme given");
  return out;
}

std::optional<double> parse_theta_flag(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  if (*text == "inf") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const double v = std::stod(*text, &used);
    if (used != text->size() || !(v >= 0.0)) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ValidationError("--theta must be a nonnegative number or 'inf'");
  }
}

json solution_json(const SlotSolution& s) {
  json channels = json::array();
  json power = json::array();
  json sinr = json::array();
  for (int k = 0; k < s.assignment.num_uavs(); ++k) {
    channels.push_back(s.assignment.channel(k));
    power.push_back(s.power(k));
    sinr.push_back(to_db(s.per_uav_sinr(k)));
  }
  return {{"channels", channels},
          {"power_mw", power},
          {"sinr_db", sinr},
          {"min_sinr_db", to_db(s.min_weighted())},
          {"common_sinr", s.common_sinr}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Channel assignment and power allocation for GCU-to-UAV uplinks"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  std::optional<std::string> theta_text;
  std::optional<int> tau;
  std::optional<double> mu;
  auto add_overrides = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Override solver_knobs.rng_seed");
    cmd->add_option("--theta", theta_text, "Override the handover threshold (number or 'inf')");
    cmd->add_option("--tau", tau, "Override the rounding exponent tau")->check(CLI::PositiveNumber);
    cmd->add_option("--mu", mu, "Override the relative smoothing parameter")->check(CLI::PositiveNumber);
  };

  std::string scenario_path;
  std::string scheme_text;
  std::string slots_text;
  std::string out_dir;
  auto* solve = app.add_subcommand("solve", "Solve every slot of a scenario with one or more schemes");
  solve->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  solve->add_option("--scheme", scheme_text, "Scheme name, comma-separated list or 'all'")->required();
  solve->add_option("--slots", slots_text, "Slot range a..b (0-based, inclusive)");
  solve->add_option("--out", out_dir, "Output directory")->required();
  add_overrides(solve);

  std::string spec_path;
  auto* sweep = app.add_subcommand("sweep", "Run an experiment specification");
  sweep->add_option("--spec", spec_path, "Experiment JSON file")->required();
  sweep->add_option("--out", out_dir, "Output directory")->required();
  add_overrides(sweep);

  int slot = 0;
  std::string model_text = "aci";
  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum of one slot (N <= 8, K <= 6)");
  oracle->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  oracle->add_option("--slot", slot, "Slot index (0-based)")->required();
  oracle->add_option("--model", model_text, "aci or nullaci")->check(CLI::IsMember({"aci", "nullaci"}));
  add_overrides(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kUsageError;
  }

  try {
    ScenarioOverrides overrides;
    overrides.seed = seed;
    overrides.theta = parse_theta_flag(theta_text);
    overrides.tau = tau;
    overrides.mu = mu;

    if (*solve) {
      const ScenarioConfig cfg = load_scenario(scenario_path, overrides);
      int first = 0;
      int last = cfg.num_slots - 1;
      if (!slots_text.empty()) std::tie(first, last) = parse_slot_range(slots_text);
      if (last >= cfg.num_slots) throw ValidationError("--slots outside [0, " + std::to_string(cfg.num_slots) + ")");
      std::vector<FlightReport> reports;
      for (Scheme s : parse_scheme_list(scheme_text)) reports.push_back(run_flight(cfg, s, first, last));
      write_solve_outputs(out_dir, cfg, reports);
      out << json{{"status", "ok"}, {"command", "solve"}, {"out", out_dir}}.dump() << '\n';
    } else if (*sweep) {
      const ExperimentSpec spec = load_experiment_spec(spec_path);
      const std::vector<SweepRun> runs = run_sweep(spec, overrides);
      write_sweep_outputs(out_dir, runs);
      out << json{{"status", "ok"}, {"command", "sweep"}, {"out", out_dir}, {"runs", runs.size()}}.dump() << '\n';
    } else if (*oracle) {
      const ScenarioConfig cfg = load_scenario(scenario_path, overrides);
      const SlotProblem prob = make_slot_problem(cfg, slot);
      const PowerModel model = model_text == "aci" ? PowerModel::kAci : PowerModel::kNullAci;
      const SlotSolution best = exhaustive_oracle_slot(prob, model);
      json j = solution_json(best);
      j["slot"] = slot;
      j["model"] = model_text;
      out << j.dump() << '\n';
    }
    return kOk;
  } catch (const ParseError& e) {
    report_error(err, "parse", e.what());
    return kInputError;
  } catch (const ValidationError& e) {
    report_error(err, "validation", e.what());
    return kInputError;
  } catch (const std::out_of_range& e) {
    report_error(err, "validation", e.what());
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    report_error(err, "io", e.what());
    return kIoError;
  } catch (const ConvergenceError& e) {
    report_error(err, "numerical", e.what());
    return kNumericalError;
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return kInternalError;
  }
}

}  // namespace uavalloc::cli
