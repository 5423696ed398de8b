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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uavalloc/aci_solver.hpp"
#include "uavalloc/scenario.hpp"
#include "uavalloc/slot_problem.hpp"

namespace uavalloc {

enum class Scheme {
  kHungarianNullAci,
  kGreedy,
  kBaseline1,
  kAo,
  kBaseline2,
  kBaseline3,
  kUpperBound,
  kExhaustiveOracle,
};

const std::vector<Scheme>& all_schemes();
std::string_view scheme_name(Scheme s);
/// Throws ValidationError on unknown names.
Scheme parse_scheme(std::string_view name);
/// Leakage-free schemes report the leakage-free SINR; the rest the physical one.
PowerModel power_model(Scheme s);

inline constexpr int kOracleMaxChannels = 8;
inline constexpr int kOracleMaxUavs = 6;

/// Enumerates all injective assignments and returns the max-min optimum, with
/// eigen power (ACI) or closed-form power (leakage-free) for each. The first
/// assignment in lexicographic order wins ties.
SlotSolution exhaustive_oracle_slot(const SlotProblem& prob, PowerModel model);

struct SlotRecord {
  int slot = 0;
  SlotSolution solution;
  bool switched = false;
};

struct FlightReport {
  Scheme scheme = Scheme::kHungarianNullAci;
  std::vector<SlotRecord> slots;
  VectorXd weights;
  /// Per-UAV SINR averaged over the slots (linear).
  VectorXd avg_sinr;
  /// min_k alpha_k avg_sinr_k.
  double objective = 0.0;
};

/// Solves consecutive slots independently, applying the handover policy
/// between neighbours when knobs.handover_theta is set. `first_slot` only
/// labels the records.
FlightReport run_slots(const std::vector<SlotProblem>& problems, Scheme scheme, const SolverKnobs& knobs,
                       int first_slot = 0);

/// Slots first..last inclusive; last < 0 means the final slot.
FlightReport run_flight(const ScenarioConfig& cfg, Scheme scheme, int first_slot = 0, int last_slot = -1);

/// Parses "a..b" (inclusive, 0-based) or a single index.
std::pair<int, int> parse_slot_range(std::string_view text);

struct ExperimentSpec {
  /// Scenario JSON text; sweeps edit it before parsing.
  std::string scenario_json;
  std::vector<Scheme> schemes;
  std::vector<int> k_values;
  std::vector<int> n_values;
  std::vector<int> l_values;
  std::vector<std::optional<double>> theta_values;
  std::vector<std::vector<double>> beta_values;
  std::vector<std::uint64_t> seeds;
  std::optional<std::pair<int, int>> slots;
};

/// JSON experiment description, see docs/scenario_schema.md. A scenario given
/// as a path is resolved relative to `base_dir`.
ExperimentSpec parse_experiment_spec(std::string_view text, const std::filesystem::path& base_dir = {});
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

struct SweepPoint {
  std::optional<int> k;
  std::optional<int> n;
  std::optional<int> l;
  std::optional<double> theta;
  bool theta_set = false;
  int beta_index = -1;
};

/// Scenario for one sweep point and seed.
ScenarioConfig sweep_scenario(const ExperimentSpec& spec, const SweepPoint& point, std::uint64_t seed,
                              const ScenarioOverrides& overrides = {});

struct SweepRun {
  SweepPoint point;
  std::uint64_t seed = 0;
  int num_uavs = 0;
  int num_channels = 0;
  int num_sources = 0;
  std::optional<double> theta;
  FlightReport report;
};

/// Cartesian product of the sweep axes, times seeds, times schemes, in that
/// nesting order.
std::vector<SweepRun> run_sweep(const ExperimentSpec& spec, const ScenarioOverrides& overrides = {});

}  // namespace uavalloc
