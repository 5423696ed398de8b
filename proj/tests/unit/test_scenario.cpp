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

#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "uavalloc/scenario.hpp"
#include "uavalloc/units.hpp"

using namespace uavalloc;

namespace {

const std::string kMinimal = R"({
  "K": 1, "N": 1, "S": 1,
  "uav_trajectories": [[[1000.0, 0.0, 0.0]]],
  "base_freq_mhz": 500.0, "channel_spacing_mhz": 5.0, "p_max_dbm": 30.0
})";

std::string scenario_path(const char* name) { return std::string(UAVALLOC_SOURCE_DIR) + "/scenarios/" + name; }

}  // namespace

TEST(Scenario, MinimalConfigIsValid) {
  const ScenarioConfig c = parse_scenario(kMinimal);
  EXPECT_EQ(c.num_uavs, 1);
  EXPECT_EQ(c.num_channels, 1);
  EXPECT_EQ(c.num_slots, 1);
  EXPECT_DOUBLE_EQ(c.p_max_mw(), 1000.0);
  EXPECT_DOUBLE_EQ(c.weights(0), 1.0);
}

TEST(Scenario, FewerChannelsThanUavsIsRejected) {
  const std::string text = R"({
    "K": 3, "N": 2, "S": 1,
    "uav_trajectories": {"generator": "formation"},
    "base_freq_mhz": 500.0, "channel_spacing_mhz": 5.0, "p_max_dbm": 30.0
  })";
  try {
    parse_scenario(text);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("N ≥ K violated"), std::string::npos) << e.what();
  }
}

TEST(Scenario, MalformedJsonIsAParseError) { EXPECT_THROW(parse_scenario("{\"K\": 1,"), ParseError); }

TEST(Scenario, UnknownKeyIsRejected) {
  std::string text = kMinimal;
  text.insert(1, "\"bogus\": 1,");
  EXPECT_THROW(parse_scenario(text), ValidationError);
}

TEST(Scenario, WrongTrajectoryLengthIsRejected) {
  const std::string text = R"({
    "K": 1, "N": 1, "S": 2,
    "uav_trajectories": [[[1000.0, 0.0, 0.0]]],
    "base_freq_mhz": 500.0, "channel_spacing_mhz": 5.0, "p_max_dbm": 30.0
  })";
  EXPECT_THROW(parse_scenario(text), ValidationError);
}

TEST(Scenario, NonPositiveWeightIsRejected) {
  std::string text = kMinimal;
  text.insert(1, "\"weights\": [0.0],");
  EXPECT_THROW(parse_scenario(text), ValidationError);
}

TEST(Scenario, DefaultConfigMatchesPublishedParameters) {
  const ScenarioConfig c = load_scenario(scenario_path("default.json"));
  EXPECT_EQ(c.num_uavs, 12);
  EXPECT_EQ(c.num_channels, 21);
  EXPECT_EQ(c.num_slots, 20);
  EXPECT_DOUBLE_EQ(c.base_freq_mhz, 500.0);
  EXPECT_DOUBLE_EQ(c.channel_spacing_mhz, 5.0);
  EXPECT_DOUBLE_EQ(c.p_max_dbm, 30.0);
  EXPECT_DOUBLE_EQ(c.eta_los_db, 3.0);
  EXPECT_DOUBLE_EQ(c.eta_nlos_db, 23.0);
  for (const auto& track : c.uav_trajectories) {
    for (const auto& p : track) EXPECT_DOUBLE_EQ(p.z(), 500.0);
    for (std::size_t s = 1; s < track.size(); ++s) EXPECT_LE((track[s] - track[s - 1]).norm(), 50.0 + 1e-9);
  }
  for (const auto& src : c.radiation_sources) EXPECT_DOUBLE_EQ(src.power_dbm, -10.0);
}

TEST(Scenario, DefaultScenarioHelperParses) {
  const ScenarioConfig c = default_scenario(3, 10);
  EXPECT_EQ(c.radiation_sources.size(), 10u);
  EXPECT_EQ(c.solver_knobs.rng_seed, 3u);
}

TEST(Scenario, JsonRoundTripPreservesEverything) {
  const ScenarioConfig a = load_scenario(scenario_path("small.json"));
  const ScenarioConfig b = parse_scenario(scenario_to_json(a));
  EXPECT_EQ(scenario_to_json(a), scenario_to_json(b));
}

TEST(Scenario, SameSeedSameGeneratedScenario) {
  const auto a = scenario_to_json(load_scenario(scenario_path("default.json")));
  const auto b = scenario_to_json(load_scenario(scenario_path("default.json")));
  EXPECT_EQ(a, b);
  ScenarioOverrides o;
  o.seed = 99;
  EXPECT_NE(a, scenario_to_json(load_scenario(scenario_path("default.json"), o)));
}

TEST(Scenario, OverridesApply) {
  ScenarioOverrides o;
  o.theta = 0.25;
  o.tau = 3;
  o.mu = 0.1;
  const ScenarioConfig c = parse_scenario(kMinimal, o);
  EXPECT_DOUBLE_EQ(*c.solver_knobs.handover_theta, 0.25);
  EXPECT_EQ(c.solver_knobs.tau, 3);
  EXPECT_DOUBLE_EQ(c.solver_knobs.mu_smooth, 0.1);
}

TEST(SlotGeometry, DistanceFromGcuAtOrigin) {
  const SlotGeometry g = slot_geometry(parse_scenario(kMinimal), 0);
  EXPECT_DOUBLE_EQ(g.distances_m(0), 1000.0);
}

TEST(SlotGeometry, ChannelGrid) {
  const std::string text = R"({
    "K": 1, "N": 3, "S": 1,
    "uav_trajectories": [[[1000.0, 0.0, 0.0]]],
    "base_freq_mhz": 500.0, "channel_spacing_mhz": 5.0, "p_max_dbm": 30.0
  })";
  const SlotGeometry g = slot_geometry(parse_scenario(text), 0);
  ASSERT_EQ(g.freqs_mhz.size(), 3);
  EXPECT_DOUBLE_EQ(g.freqs_mhz(0), 505.0);
  EXPECT_DOUBLE_EQ(g.freqs_mhz(1), 510.0);
  EXPECT_DOUBLE_EQ(g.freqs_mhz(2), 515.0);
}

TEST(SlotGeometry, GridIsStrictlyIncreasingWithExactSpacing) {
  const ScenarioConfig c = load_scenario(scenario_path("default.json"));
  const VectorXd f = c.channel_frequencies();
  for (Eigen::Index n = 1; n < f.size(); ++n) EXPECT_DOUBLE_EQ(f(n) - f(n - 1), 5.0);
}

TEST(SlotGeometry, SingleFlatSourceGivesMinusTenDbm) {
  const std::string text = R"({
    "K": 2, "N": 3, "S": 1,
    "uav_trajectories": [[[1000.0, 0.0, 0.0]], [[0.0, 800.0, 100.0]]],
    "base_freq_mhz": 500.0, "channel_spacing_mhz": 5.0, "p_max_dbm": 30.0,
    "radiation_sources": [{"position": [500.0, 500.0, 0.0], "power_dbm": -10.0}],
    "ei_model": {"attenuation": "none", "spectrum": "flat", "noise_floor_dbm": -200.0}
  })";
  const SlotGeometry g = slot_geometry(parse_scenario(text), 0);
  const double floor = dbm_to_mw(-200.0);
  for (Eigen::Index k = 0; k < 2; ++k)
    for (Eigen::Index n = 0; n < 3; ++n) EXPECT_DOUBLE_EQ(g.ei_mw(k, n), 0.1 + floor);
}

TEST(SlotGeometry, FreeSpaceSourceDeliversConfiguredPowerAtReferenceDistance) {
  const std::string text = R"({
    "K": 1, "N": 1, "S": 1,
    "uav_trajectories": [[[1000.0, 0.0, 0.0]]],
    "base_freq_mhz": 500.0, "channel_spacing_mhz": 5.0, "p_max_dbm": 30.0,
    "radiation_sources": [{"position": [1000.0, 0.0, 250.0], "power_dbm": -10.0}],
    "ei_model": {"reference_distance_m": 250.0, "noise_floor_dbm": -200.0}
  })";
  const SlotGeometry g = slot_geometry(parse_scenario(text), 0);
  EXPECT_NEAR(g.ei_mw(0, 0), 0.1, 1e-15);
}

TEST(SlotGeometry, EiIsPositiveEverywhere) {
  const ScenarioConfig c = load_scenario(scenario_path("default.json"));
  for (int s = 0; s < c.num_slots; ++s) {
    const SlotGeometry g = slot_geometry(c, s);
    EXPECT_TRUE((g.ei_mw.array() > 0.0).all());
    EXPECT_TRUE((g.distances_m.array() > 0.0).all());
  }
}

TEST(SlotGeometry, DistancesInvariantUnderTranslation) {
  ScenarioConfig c = load_scenario(scenario_path("small.json"));
  const VectorXd before = slot_geometry(c, 2).distances_m;
  const Vec3 shift(123.5, -77.25, 40.0);
  c.gcu_position += shift;
  for (auto& track : c.uav_trajectories)
    for (auto& p : track) p += shift;
  const VectorXd after = slot_geometry(c, 2).distances_m;
  for (Eigen::Index k = 0; k < before.size(); ++k) EXPECT_NEAR(after(k), before(k), 1e-9);
}

TEST(SlotGeometry, PeakedSpectrumFavorsPeakChannel) {
  const std::string text = R"({
    "K": 1, "N": 5, "S": 1,
    "uav_trajectories": [[[1000.0, 0.0, 0.0]]],
    "base_freq_mhz": 500.0, "channel_spacing_mhz": 5.0, "p_max_dbm": 30.0,
    "radiation_sources": [{"position": [0.0, 0.0, 0.0], "power_dbm": -10.0, "peak_channel": 2}],
    "ei_model": {"spectrum": "peaked", "attenuation": "none"}
  })";
  const SlotGeometry g = slot_geometry(parse_scenario(text), 0);
  Eigen::Index arg = 0;
  g.ei_mw.row(0).maxCoeff(&arg);
  EXPECT_EQ(arg, 2);
  EXPECT_DOUBLE_EQ(g.ei_mw(0, 1), g.ei_mw(0, 3));
}

TEST(SlotGeometry, SlotOutOfRangeThrows) {
  EXPECT_THROW(slot_geometry(parse_scenario(kMinimal), 1), std::out_of_range);
}

TEST(Formation, CentroidFollowsTheLegAtTheConfiguredSpeed) {
  FormationTrajectory spec;
  const auto tracks = formation_trajectories(4, 20, spec);
  for (int s = 0; s < 20; ++s) {
    Vec3 centroid = Vec3::Zero();
    for (const auto& t : tracks) centroid += t[static_cast<std::size_t>(s)];
    centroid /= 4.0;
    EXPECT_NEAR(centroid.x(), 50.0 * (s + 1), 1e-9);
    EXPECT_NEAR(centroid.y(), 0.0, 1e-9);
    EXPECT_NEAR(centroid.z(), 500.0, 1e-9);
  }
}
