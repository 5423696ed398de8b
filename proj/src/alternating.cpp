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

#include <cmath>
#include <stdexcept>

#include "uavalloc/aci_solver.hpp"
#include "uavalloc/eig_power.hpp"
#include "uavalloc/nullaci_solver.hpp"

namespace uavalloc {

SmoothedObjectiveParams<double> smoothing_params(const SlotProblem& prob, const MatrixXd& a, const VectorXd& p,
                                                 const SolverKnobs& knobs, double* scale_out) {
  SmoothedObjectiveParams<double> params;
  params.tau = knobs.tau;
  params.w_hat = prob.aci.w_hat;
  params.mu = 1.0;
  double scale = std::abs(surrogate_sinr<double>(a, p, prob.gains, params, prob.ei, prob.weights).minCoeff());
  if (!(scale > 0.0) || !std::isfinite(scale)) scale = 1.0;
  params.mu = knobs.mu_smooth * scale;
  if (scale_out) *scale_out = scale;
  return params;
}

namespace {

MatrixXd gp_start(const Assignment& current, GpInit init) {
  const MatrixXd uniform = MatrixXd::Constant(current.num_channels(), current.num_uavs(),
                                              1.0 / static_cast<double>(current.num_channels()));
  switch (init) {
    case GpInit::kUniform: return uniform;
    case GpInit::kCurrent: return current.matrix();
    case GpInit::kBlend: return 0.5 * (uniform + current.matrix());
  }
  return uniform;
}

}  // namespace

AoResult alternating_optimize_slot(const SlotProblem& prob, const Assignment& a0, const SolverKnobs& knobs) {
  prob.validate();
  if (a0.num_uavs() != prob.num_uavs() || a0.num_channels() != prob.num_channels()) {
    throw std::invalid_argument("alternating optimization: A0 does not match the slot problem");
  }
  AoResult res;
  res.solution = eig_power_fixed_assignment(prob, a0);
  double objective = res.solution.min_weighted();
  res.trace.iterations.push_back({objective, false, true, 0, res.solution.common_sinr});

  GpOptions gp_opts;
  gp_opts.armijo = knobs.armijo;
  gp_opts.max_iter = knobs.gp_max_iter;
  gp_opts.tol = knobs.gp_tol;

  for (int it = 0; it < knobs.ao_max_iter; ++it) {
    const Assignment& current = res.solution.assignment;
    const MatrixXd start = gp_start(current, knobs.gp_init);
    const auto params = smoothing_params(prob, start, res.solution.power, knobs, &gp_opts.scale);
    const GpResult gp = gradient_projection_assignment(start, res.solution.power, prob, params, gp_opts);
    const Assignment candidate = round_assignment(gp.a);

    AoIteration rec;
    rec.gp_iterations = gp.trace.iterations;
    if (candidate == current) {
      rec.min_weighted_sinr = objective;
      rec.delta = res.solution.common_sinr;
      res.trace.iterations.push_back(rec);
      break;
    }
    rec.assignment_changed = true;
    SlotSolution trial = eig_power_fixed_assignment(prob, candidate);
    if (!(trial.min_weighted() > objective)) {
      rec.min_weighted_sinr = objective;
      rec.delta = res.solution.common_sinr;
      res.trace.iterations.push_back(rec);
      break;
    }
    const double gain = (trial.min_weighted() - objective) / objective;
    res.solution = std::move(trial);
    objective = res.solution.min_weighted();
    rec.accepted = true;
    rec.min_weighted_sinr = objective;
    rec.delta = res.solution.common_sinr;
    res.trace.iterations.push_back(rec);
    if (gain <= knobs.ao_tol) break;
  }
  return res;
}

AoResult alternating_optimize_slot(const SlotProblem& prob, const SolverKnobs& knobs) {
  return alternating_optimize_slot(prob, solve_nullaci_slot(prob).assignment, knobs);
}

SlotSolution solve_fixed_assignment(const SlotProblem& prob, const Assignment& a, PowerModel model) {
  return model == PowerModel::kAci ? eig_power_fixed_assignment(prob, a) : nullaci_fixed_assignment(prob, a);
}

HandoverDecision apply_handover_policy(const SlotProblem& prob, const Assignment& prev,
                                       const SlotSolution& candidate, double theta, PowerModel model) {
  if (!(theta >= 0.0)) throw std::invalid_argument("handover: theta must be nonnegative");
  HandoverDecision out;
  if (candidate.assignment == prev) {
    out.solution = candidate;
    return out;
  }
  SlotSolution retained = solve_fixed_assignment(prob, prev, model);
  const double base = retained.min_weighted();
  out.improvement = (candidate.min_weighted() - base) / base;
  out.switched = out.improvement > 0.0 && out.improvement >= theta;
  out.solution = out.switched ? candidate : std::move(retained);
  return out;
}

}  // namespace uavalloc
