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

#include "uavalloc/assignment.hpp"
#include "uavalloc/channel_model.hpp"
#include "uavalloc/scenario.hpp"
#include "uavalloc/types.hpp"

namespace uavalloc {

/// Everything a per-slot solver needs. Slots are independent, so a flight is
/// just a sequence of these.
struct SlotProblem {
  GainVector<double> gains;
  MatrixXd ei;  // K x N, mW
  VectorXd weights;
  double p_max_mw = 1.0;
  AciMatrix<double> aci;

  int num_uavs() const { return static_cast<int>(gains.c.size()); }
  int num_channels() const { return static_cast<int>(gains.f_inv_sq.size()); }

  /// N x K prioritized channel quality.
  MatrixXd pcq() const { return build_pcq(gains, ei, weights); }

  /// Throws ValidationError on inconsistent dimensions or nonpositive data.
  void validate() const;
};

SlotProblem make_slot_problem(const ScenarioConfig& cfg, int slot);

/// Assembles a problem from raw arrays; the ACI matrix is built on `freqs_mhz`.
SlotProblem make_slot_problem(const VectorXd& gain_coefficients, const VectorXd& freqs_mhz,
                              const MatrixXd& ei, const VectorXd& weights, double p_max_mw,
                              const AciProfile& profile, std::optional<double> w_diag_penalty = std::nullopt);

struct SlotSolution {
  Assignment assignment;
  VectorXd power;
  /// Null-ACI: the common prioritized SINR. ACI with eigen power: delta.
  double common_sinr = 0.0;
  VectorXd per_uav_sinr;
  VectorXd weighted_sinr;

  double min_weighted() const { return weighted_sinr.minCoeff(); }
};

/// Fills the SINR fields with the leakage-free model.
SlotSolution evaluate_nullaci(const SlotProblem& prob, const Assignment& a, const VectorXd& power,
                              double common_sinr);

/// Fills the SINR fields with the physical ACI model (unpenalized W).
SlotSolution evaluate_aci(const SlotProblem& prob, const Assignment& a, const VectorXd& power,
                          double common_sinr);

}  // namespace uavalloc
