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

#include "uavalloc/channel_model.hpp"
#include "uavalloc/errors.hpp"
#include "uavalloc/rng.hpp"
#include "uavalloc/types.hpp"

namespace uavalloc {

enum class LinkType { kLos, kNlos };
enum class EiAttenuation { kNone, kFreeSpace };
enum class EiSpectrum { kFlat, kPeaked };
/// Starting point of each gradient-projection run inside the alternating loop.
enum class GpInit { kUniform, kCurrent, kBlend };

struct RadiationSource {
  Vec3 position = Vec3::Zero();
  double power_dbm = -10.0;
  /// Channel index where a peaked spectral profile is centred.
  int peak_channel = 0;
};

/// External interference seen by UAV k on channel n:
///   noise_floor + sum_l P_l * attenuation(d(k, l)) * spectral(n, l)
/// where free-space attenuation is (reference_distance / d)^2, so a source
/// delivers exactly its configured power at the reference distance.
struct EiModel {
  double noise_floor_dbm = -100.0;
  EiAttenuation attenuation = EiAttenuation::kFreeSpace;
  double reference_distance_m = 1000.0;
  EiSpectrum spectrum = EiSpectrum::kFlat;
  /// exp(-|n - peak| / width) for peaked spectra.
  double peak_width_channels = 2.0;
};

struct ArmijoParams {
  double initial_step = 1.0;
  double shrink = 0.5;
  double slope = 1e-4;
  int max_backtracks = 30;
};

struct SolverKnobs {
  int tau = 2;
  /// Smoothing parameter relative to the magnitude of the initial worst
  /// surrogate SINR.
  double mu_smooth = 0.05;
  /// Co-channel penalty on the diagonal of W_hat; default from the ACI matrix.
  std::optional<double> w_diag_penalty;
  /// Minimum fractional improvement required to change channels between
  /// consecutive slots. Empty disables the policy; +inf never switches.
  std::optional<double> handover_theta;
  ArmijoParams armijo;
  int gp_max_iter = 200;
  int ao_max_iter = 30;
  double gp_tol = 1e-6;
  double ao_tol = 1e-6;
  GpInit gp_init = GpInit::kUniform;
  /// Random baselines draw a fresh assignment every slot (else once per flight).
  bool rerandomize_per_slot = true;
  std::uint64_t rng_seed = 1;
};

struct ScenarioConfig {
  int num_uavs = 1;      // K
  int num_channels = 1;  // N
  int num_slots = 1;     // S
  Vec3 gcu_position = Vec3::Zero();
  /// [uav][slot] positions in meters.
  std::vector<std::vector<Vec3>> uav_trajectories;
  double base_freq_mhz = 500.0;
  double channel_spacing_mhz = 5.0;
  double p_max_dbm = 30.0;
  double eta_los_db = 3.0;
  double eta_nlos_db = 23.0;
  /// [uav][slot]; empty means line of sight everywhere.
  std::vector<std::vector<LinkType>> link_type;
  std::vector<RadiationSource> radiation_sources;
  VectorXd weights;  // alpha_k
  EiModel ei_model;
  AciProfile aci_profile;
  SolverKnobs solver_knobs;

  /// Throws ValidationError naming the first violated invariant.
  void validate() const;

  double p_max_mw() const;
  /// f_n = F + n * spacing for n = 1..N, MHz.
  VectorXd channel_frequencies() const;
  LinkType link(int uav, int slot) const;
};

struct SlotGeometry {
  VectorXd distances_m;  // K
  VectorXd freqs_mhz;    // N
  MatrixXd ei_mw;        // K x N, includes the noise floor
};

SlotGeometry slot_geometry(const ScenarioConfig& cfg, int slot);

/// Formation flight: the centroid moves from `start` toward `end` at `speed`
/// and reaches slot s (0-based) after (s + 1) slot durations; UAVs sit on a
/// square grid of pitch `spacing` around the centroid.
struct FormationTrajectory {
  Vec3 start{0.0, 0.0, 500.0};
  Vec3 end{1000.0, 0.0, 500.0};
  double speed_mps = 50.0;
  double slot_duration_s = 1.0;
  double spacing_m = 20.0;
};

std::vector<std::vector<Vec3>> formation_trajectories(int num_uavs, int num_slots,
                                                      const FormationTrajectory& spec);

/// Sources placed uniformly on a horizontal rectangle.
struct SourceField {
  int count = 5;
  double x_min = -500.0, x_max = 1500.0;
  double y_min = -1000.0, y_max = 1000.0;
  double z_m = 0.0;
  double power_dbm = -10.0;
};

/// Draws sources one at a time, so the first L sources of a larger draw with
/// the same generator state equal a draw of L sources.
std::vector<RadiationSource> random_sources(const SourceField& field, int num_channels, Rng& rng);

struct ScenarioOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> theta;
  std::optional<int> tau;
  std::optional<double> mu;
};

/// Parses the JSON scenario schema (see docs/scenario_schema.md). Generator
/// blocks are expanded with the (possibly overridden) seed. Throws ParseError
/// on malformed text and ValidationError on schema or invariant violations.
ScenarioConfig parse_scenario(std::string_view json_text, const ScenarioOverrides& overrides = {});
ScenarioConfig load_scenario(const std::filesystem::path& path, const ScenarioOverrides& overrides = {});

/// Fully expanded JSON form; parse_scenario(scenario_to_json(c)) reproduces c.
std::string scenario_to_json(const ScenarioConfig& cfg);

/// Desk-scale reproduction of the reference study: K=12, N=21, S=20,
/// H=500 m, 50 m/s, F=500 MHz, 5 MHz spacing, 30 dBm budget, 3/23 dB extra
/// loss, -10 dBm sources, weights in [0.8, 1.5].
ScenarioConfig default_scenario(std::uint64_t seed = 1, int num_sources = 5);

}  // namespace uavalloc
