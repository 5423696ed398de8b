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

#include "uavalloc/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <type_traits>

#include "json.hpp"
#include "uavalloc/baselines.hpp"
#include "uavalloc/errors.hpp"
#include "uavalloc/nullaci_solver.hpp"

namespace uavalloc {

using nlohmann::json;

const std::vector<Scheme>& all_schemes() {
  static const std::vector<Scheme> schemes = {
      Scheme::kHungarianNullAci, Scheme::kGreedy,     Scheme::kBaseline1,  Scheme::kAo,
      Scheme::kBaseline2,        Scheme::kBaseline3,  Scheme::kUpperBound, Scheme::kExhaustiveOracle};
  return schemes;
}

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kHungarianNullAci: return "hungarian_nullaci";
    case Scheme::kGreedy: return "greedy";
    case Scheme::kBaseline1: return "baseline1";
    case Scheme::kAo: return "ao";
    case Scheme::kBaseline2: return "baseline2";
    case Scheme::kBaseline3: return "baseline3";
    case Scheme::kUpperBound: return "upper_bound";
    case Scheme::kExhaustiveOracle: return "exhaustive_oracle";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  for (Scheme s : all_schemes())
    if (scheme_name(s) == name) return s;
  throw ValidationError("unknown scheme '" + std::string(name) + "'");
}

PowerModel power_model(Scheme s) {
  switch (s) {
    case Scheme::kHungarianNullAci:
    case Scheme::kGreedy:
    case Scheme::kBaseline1:
    case Scheme::kUpperBound: return PowerModel::kNullAci;
    default: return PowerModel::kAci;
  }
}

SlotSolution exhaustive_oracle_slot(const SlotProblem& prob, PowerModel model) {
  prob.validate();
  const int n = prob.num_channels();
  const int k_count = prob.num_uavs();
  if (n > kOracleMaxChannels || k_count > kOracleMaxUavs) {
    throw ValidationError("exhaustive oracle requires N <= 8 and K <= 6");
  }
  std::optional<SlotSolution> best;
  std::vector<int> channel(static_cast<std::size_t>(k_count));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void(int)> visit = [&](int k) {
    if (k == k_count) {
      SlotSolution s = solve_fixed_assignment(prob, Assignment(n, channel), model);
      if (!best || s.min_weighted() > best->min_weighted()) best = std::move(s);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      used[static_cast<std::size_t>(c)] = 1;
      channel[static_cast<std::size_t>(k)] = c;
      visit(k + 1);
      used[static_cast<std::size_t>(c)] = 0;
    }
  };
  visit(0);
  return *best;
}

FlightReport run_slots(const std::vector<SlotProblem>& problems, Scheme scheme, const SolverKnobs& knobs,
                       int first_slot) {
  if (problems.empty()) throw ValidationError("run_slots: no slots");
  const int k_count = problems.front().num_uavs();
  const int n = problems.front().num_channels();
  const PowerModel model = power_model(scheme);
  Rng rng = make_rng(knobs.rng_seed, RngStream::kRandomAssignment);
  std::optional<Assignment> flight_random;

  FlightReport report;
  report.scheme = scheme;
  report.weights = problems.front().weights;
  report.avg_sinr = VectorXd::Zero(k_count);
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const SlotProblem& prob = problems[i];
    if (prob.num_uavs() != k_count || prob.num_channels() != n) {
      throw ValidationError("run_slots: slot dimensions differ");
    }
    auto draw = [&]() {
      if (knobs.rerandomize_per_slot) return random_assignment(rng, n, k_count);
      if (!flight_random) flight_random = random_assignment(rng, n, k_count);
      return *flight_random;
    };
    SlotSolution sol;
    switch (scheme) {
      case Scheme::kHungarianNullAci: sol = solve_nullaci_slot(prob); break;
      case Scheme::kGreedy: sol = greedy_solve(prob); break;
      case Scheme::kBaseline1: sol = baseline1_solve(prob, draw()); break;
      case Scheme::kAo: sol = alternating_optimize_slot(prob, knobs).solution; break;
      case Scheme::kBaseline2: sol = baseline2_solve(prob); break;
      case Scheme::kBaseline3: sol = baseline3_solve(prob, draw()); break;
      case Scheme::kUpperBound: sol = upper_bound_solve(prob); break;
      case Scheme::kExhaustiveOracle: sol = exhaustive_oracle_slot(prob, model); break;
    }
    SlotRecord rec;
    rec.slot = first_slot + static_cast<int>(i);
    if (knobs.handover_theta && i > 0) {
      HandoverDecision d =
          apply_handover_policy(prob, report.slots.back().solution.assignment, sol, *knobs.handover_theta, model);
      rec.solution = std::move(d.solution);
      rec.switched = d.switched;
    } else {
      rec.solution = std::move(sol);
      rec.switched = i > 0 && !(rec.solution.assignment == report.slots.back().solution.assignment);
    }
    report.avg_sinr += rec.solution.per_uav_sinr;
    report.slots.push_back(std::move(rec));
  }
  report.avg_sinr /= static_cast<double>(problems.size());
  report.objective = report.avg_sinr.cwiseProduct(report.weights).minCoeff();
  return report;
}

FlightReport run_flight(const ScenarioConfig& cfg, Scheme scheme, int first_slot, int last_slot) {
  if (last_slot < 0) last_slot = cfg.num_slots - 1;
  if (first_slot < 0 || first_slot > last_slot || last_slot >= cfg.num_slots) {
    throw std::out_of_range("run_flight: slot range outside [0, " + std::to_string(cfg.num_slots) + ")");
  }
  std::vector<SlotProblem> problems;
  for (int s = first_slot; s <= last_slot; ++s) problems.push_back(make_slot_problem(cfg, s));
  return run_slots(problems, scheme, cfg.solver_knobs, first_slot);
}

std::pair<int, int> parse_slot_range(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || v < 0) {
      throw ValidationError("invalid slot range '" + std::string(text) + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  const int a = parse_int(text.substr(0, dots));
  const int b = parse_int(text.substr(dots + 2));
  if (a > b) throw ValidationError("invalid slot range '" + std::string(text) + "'");
  return {a, b};
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

template <typename T>
std::vector<T> int_list(const json& j, const char* name) {
  require(j.is_array() && !j.empty(), std::string("sweep.") + name + " must be a non-empty array");
  std::vector<T> out;
  for (const auto& v : j) {
    require(v.is_number_integer() && v.get<long long>() >= 0, std::string("sweep.") + name + " entries must be nonnegative integers");
    out.push_back(v.get<T>());
  }
  return out;
}

std::optional<double> theta_value(const json& v) {
  if (v.is_null()) return std::nullopt;
  if (v.is_string()) {
    require(v.get<std::string>() == "inf", "sweep.theta: only the string \"inf\" is accepted");
    return std::numeric_limits<double>::infinity();
  }
  require(v.is_number() && v.get<double>() >= 0.0, "sweep.theta entries must be nonnegative numbers, \"inf\" or null");
  return v.get<double>();
}

std::string read_file(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw ParseError(std::string(what) + ": cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json scenario_object(const ExperimentSpec& spec) {
  try {
    return json::parse(spec.scenario_json);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
}

}  // namespace

ExperimentSpec parse_experiment_spec(std::string_view text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("experiment spec: ") + e.what());
  }
  require(j.is_object(), "experiment spec: expected an object");
  for (const auto& item : j.items()) {
    static const std::set<std::string> keys = {"scenario", "schemes", "sweep", "seeds", "repetitions", "base_seed", "slots"};
    require(keys.count(item.key()) != 0, "experiment spec: unknown key '" + item.key() + "'");
  }
  ExperimentSpec spec;
  require(j.contains("scenario"), "experiment spec: missing 'scenario'");
  const json& sc = j["scenario"];
  if (sc.is_string()) {
    std::filesystem::path p = sc.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    spec.scenario_json = read_file(p, "scenario");
  } else {
    require(sc.is_object(), "experiment spec: 'scenario' must be a path or an object");
    spec.scenario_json = sc.dump();
  }

  require(j.contains("schemes") && j["schemes"].is_array() && !j["schemes"].empty(),
          "experiment spec: 'schemes' must be a non-empty array");
  for (const auto& s : j["schemes"]) {
    require(s.is_string(), "experiment spec: scheme names must be strings");
    spec.schemes.push_back(parse_scheme(s.get<std::string>()));
  }

  if (j.contains("sweep")) {
    const json& sw = j["sweep"];
    require(sw.is_object(), "experiment spec: 'sweep' must be an object");
    for (const auto& item : sw.items()) {
      static const std::set<std::string> axes = {"K", "N", "L", "theta", "beta"};
      require(axes.count(item.key()) != 0, "sweep: unknown axis '" + item.key() + "'");
    }
    if (sw.contains("K")) spec.k_values = int_list<int>(sw["K"], "K");
    if (sw.contains("N")) spec.n_values = int_list<int>(sw["N"], "N");
    if (sw.contains("L")) spec.l_values = int_list<int>(sw["L"], "L");
    if (sw.contains("theta")) {
      require(sw["theta"].is_array() && !sw["theta"].empty(), "sweep.theta must be a non-empty array");
      for (const auto& v : sw["theta"]) spec.theta_values.push_back(theta_value(v));
    }
    if (sw.contains("beta")) {
      require(sw["beta"].is_array() && !sw["beta"].empty(), "sweep.beta must be a non-empty array of arrays");
      for (const auto& row : sw["beta"]) {
        require(row.is_array() && !row.empty(), "sweep.beta entries must be non-empty arrays");
        std::vector<double> betas;
        for (const auto& b : row) {
          require(b.is_number() && b.get<double>() > 0.0, "sweep.beta values must be positive");
          betas.push_back(b.get<double>());
        }
        spec.beta_values.push_back(std::move(betas));
      }
    }
  }

  if (j.contains("seeds")) {
    require(!j.contains("repetitions") && !j.contains("base_seed"),
            "experiment spec: give either 'seeds' or 'repetitions'/'base_seed'");
    require(j["seeds"].is_array() && !j["seeds"].empty(), "experiment spec: 'seeds' must be a non-empty array");
    for (const auto& s : j["seeds"]) {
      require(s.is_number_unsigned(), "experiment spec: seeds must be nonnegative integers");
      spec.seeds.push_back(s.get<std::uint64_t>());
    }
  } else {
    const int reps = j.value("repetitions", 1);
    require(reps >= 1, "experiment spec: repetitions >= 1 violated");
    const std::uint64_t base = j.value("base_seed", std::uint64_t{1});
    for (int r = 0; r < reps; ++r) spec.seeds.push_back(base + static_cast<std::uint64_t>(r));
  }
  if (j.contains("slots")) {
    require(j["slots"].is_string(), "experiment spec: 'slots' must be a string like \"0..9\"");
    spec.slots = parse_slot_range(j["slots"].get<std::string>());
  }

  // Exhaustive enumeration is only allowed on small instances.
  const bool oracle = std::find(spec.schemes.begin(), spec.schemes.end(), Scheme::kExhaustiveOracle) != spec.schemes.end();
  if (oracle) {
    const json base = scenario_object(spec);
    std::vector<int> ks = spec.k_values, ns = spec.n_values;
    if (ks.empty()) ks.push_back(base.value("K", 0));
    if (ns.empty()) ns.push_back(base.value("N", 0));
    for (int k : ks)
      for (int n : ns)
        require(n <= kOracleMaxChannels && k <= kOracleMaxUavs,
                "exhaustive_oracle requires N <= 8 and K <= 6 at every sweep point");
  }
  return spec;
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
  return parse_experiment_spec(read_file(path, "experiment spec"), path.parent_path());
}

ScenarioConfig sweep_scenario(const ExperimentSpec& spec, const SweepPoint& point, std::uint64_t seed,
                              const ScenarioOverrides& overrides) {
  json j = scenario_object(spec);
  require(j.is_object(), "scenario: expected an object");
  if (point.k) {
    j["K"] = *point.k;
    require(!j.contains("uav_trajectories") || j["uav_trajectories"].is_object(),
            "sweeping K needs a trajectory generator, not explicit positions");
    require(!j.contains("weights") || j["weights"].is_object() || point.beta_index >= 0,
            "sweeping K needs a weight generator, not an explicit list");
    require(!j.contains("link_type") || j["link_type"].is_string(),
            "sweeping K needs a single link_type, not per-UAV flags");
  }
  if (point.n) j["N"] = *point.n;
  if (point.l) {
    require(j.contains("radiation_sources") && j["radiation_sources"].is_object(),
            "sweeping L needs a radiation source generator");
    j["radiation_sources"]["count"] = *point.l;
  }
  if (point.beta_index >= 0) {
    const auto& betas = spec.beta_values[static_cast<std::size_t>(point.beta_index)];
    json w = json::array();
    for (double b : betas) w.push_back(1.0 / b);
    j["weights"] = w;
  }
  if (point.theta_set) {
    if (!j.contains("solver_knobs")) j["solver_knobs"] = json::object();
    if (!point.theta) {
      j["solver_knobs"]["handover_theta"] = nullptr;
    } else if (std::isinf(*point.theta)) {
      j["solver_knobs"]["handover_theta"] = "inf";
    } else {
      j["solver_knobs"]["handover_theta"] = *point.theta;
    }
  }
  ScenarioOverrides o = overrides;
  o.seed = seed;
  return parse_scenario(j.dump(), o);
}

std::vector<SweepRun> run_sweep(const ExperimentSpec& spec, const ScenarioOverrides& overrides) {
  auto axis = [](const auto& values) {
    using T = typename std::decay_t<decltype(values)>::value_type;
    std::vector<std::optional<T>> out;
    for (const auto& v : values) out.emplace_back(v);
    if (out.empty()) out.emplace_back(std::nullopt);
    return out;
  };
  const auto ks = axis(spec.k_values);
  const auto ns = axis(spec.n_values);
  const auto ls = axis(spec.l_values);
  const int beta_count = spec.beta_values.empty() ? 1 : static_cast<int>(spec.beta_values.size());
  const int theta_count = spec.theta_values.empty() ? 1 : static_cast<int>(spec.theta_values.size());
  std::vector<std::uint64_t> seeds = spec.seeds;
  if (overrides.seed) seeds = {*overrides.seed};

  std::vector<SweepRun> runs;
  for (const auto& k : ks) {
    for (const auto& n : ns) {
      for (const auto& l : ls) {
        for (int ti = 0; ti < theta_count; ++ti) {
          for (int bi = 0; bi < beta_count; ++bi) {
            SweepPoint point;
            point.k = k;
            point.n = n;
            point.l = l;
            if (!spec.theta_values.empty()) {
              point.theta_set = true;
              point.theta = spec.theta_values[static_cast<std::size_t>(ti)];
            }
            point.beta_index = spec.beta_values.empty() ? -1 : bi;
            for (std::uint64_t seed : seeds) {
              const ScenarioConfig cfg = sweep_scenario(spec, point, seed, overrides);
              int first = 0;
              int last = cfg.num_slots - 1;
              if (spec.slots) {
                first = spec.slots->first;
                last = spec.slots->second;
              }
              std::vector<SlotProblem> problems;
              if (first < 0 || last >= cfg.num_slots) throw ValidationError("experiment spec: slot range outside the flight");
              for (int s = first; s <= last; ++s) problems.push_back(make_slot_problem(cfg, s));
              for (Scheme scheme : spec.schemes) {
                SweepRun run;
                run.point = point;
                run.seed = seed;
                run.num_uavs = cfg.num_uavs;
                run.num_channels = cfg.num_channels;
                run.num_sources = static_cast<int>(cfg.radiation_sources.size());
                run.theta = cfg.solver_knobs.handover_theta;
                run.report = run_slots(problems, scheme, cfg.solver_knobs, first);
                runs.push_back(std::move(run));
              }
            }
          }
        }
      }
    }
  }
  return runs;
}

}  // namespace uavalloc
