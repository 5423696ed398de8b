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

#include <optional>
#include <vector>

#include "uavalloc/assignment.hpp"
#include "uavalloc/scenario.hpp"
#include "uavalloc/slot_problem.hpp"
#include "uavalloc/smoothing.hpp"
#include "uavalloc/types.hpp"

namespace uavalloc {

struct GpOptions {
  ArmijoParams armijo;
  int max_iter = 200;
  /// Stop once |F_{t+1} - F_t| <= tol * scale.
  double tol = 1e-6;
  /// Gradient normalization; the objective's natural magnitude.
  double scale = 1.0;
};

struct GpTrace {
  /// Smoothed objective at A0 and after every accepted step.
  std::vector<double> objective;
  int iterations = 0;
  int backtracks = 0;
  bool stationary = false;
};

struct GpResult {
  MatrixXd a;
  GpTrace trace;
};

/// Projected gradient descent on the smoothed objective over per-column
/// simplices with Armijo backtracking along A + alpha (proj(A - grad / scale) - A).
GpResult gradient_projection_assignment(const MatrixXd& a0, const VectorXd& p, const SlotProblem& prob,
                                        const SmoothedObjectiveParams<double>& params, const GpOptions& opts);

/// Per-column argmax (lowest index on ties). When two columns share a row the
/// one with the larger gap between its two largest entries keeps it; the
/// others, in decreasing gap order, take their best free row.
Assignment round_assignment(const MatrixXd& a);

struct AoIteration {
  double min_weighted_sinr = 0.0;
  bool assignment_changed = false;
  bool accepted = false;
  int gp_iterations = 0;
  double delta = 0.0;
};

struct AoTrace {
  /// Entry 0 is the starting point after the initial power solve.
  std::vector<AoIteration> iterations;
};

struct AoResult {
  SlotSolution solution;
  AoTrace trace;
};

/// Smoothing parameters for a slot: tau from the knobs, mu relative to
/// |min f_hat| at (A, p), W_hat from the problem.
SmoothedObjectiveParams<double> smoothing_params(const SlotProblem& prob, const MatrixXd& a, const VectorXd& p,
                                                 const SolverKnobs& knobs, double* scale_out = nullptr);

/// Alternating optimization of channels (gradient projection and rounding at
/// fixed power) and power (eigen method at fixed channels), starting from a0.
/// A new assignment is kept only if it strictly raises the min weighted SINR
/// under the physical ACI model; the loop ends at the first rejection, at a
/// relative gain <= ao_tol or after ao_max_iter rounds.
AoResult alternating_optimize_slot(const SlotProblem& prob, const Assignment& a0, const SolverKnobs& knobs);

/// Convenience: starts from the leakage-free Hungarian assignment.
AoResult alternating_optimize_slot(const SlotProblem& prob, const SolverKnobs& knobs);

enum class PowerModel { kNullAci, kAci };

/// Optimal power for a fixed assignment under the given model.
SlotSolution solve_fixed_assignment(const SlotProblem& prob, const Assignment& a, PowerModel model);

struct HandoverDecision {
  SlotSolution solution;
  bool switched = false;
  /// (candidate - retained) / retained, min weighted SINR.
  double improvement = 0.0;
};

/// Keeps `prev` (with power re-optimized under `model`) unless the candidate
/// improves the min weighted SINR by at least `theta` (relative) and by a
/// positive amount. theta = +inf never switches.
HandoverDecision apply_handover_policy(const SlotProblem& prob, const Assignment& prev,
                                       const SlotSolution& candidate, double theta, PowerModel model);

}  // namespace uavalloc
