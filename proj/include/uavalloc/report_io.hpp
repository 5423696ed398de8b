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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "uavalloc/harness.hpp"

namespace uavalloc {

/// Shortest round-trip decimal form; "inf", "-inf", "nan" for non-finite.
std::string format_double(double v);
/// 10 log10(v).
double to_db(double linear);

/// solve outputs: slots.csv, uavs.csv, flight.csv, plot.dat.
void write_solve_outputs(const std::filesystem::path& dir, const ScenarioConfig& cfg,
                         const std::vector<FlightReport>& reports);

struct SlotSummaryRow {
  SweepPoint point;
  int num_uavs = 0;
  int num_channels = 0;
  int num_sources = 0;
  std::optional<double> theta;
  Scheme scheme = Scheme::kAo;
  int slot = 0;
  int seeds = 0;
  /// Mean over seeds of the slot's min weighted SINR in dB.
  double mean_min_sinr_db = 0.0;
};

/// Groups runs by (sweep point, scheme, slot), keeping first-appearance order.
std::vector<SlotSummaryRow> summarize_per_slot(const std::vector<SweepRun>& runs);

/// sweep outputs: runs.csv, per_uav.csv, summary_per_slot.csv, summary.csv,
/// plot.dat.
void write_sweep_outputs(const std::filesystem::path& dir, const std::vector<SweepRun>& runs);

}  // namespace uavalloc
