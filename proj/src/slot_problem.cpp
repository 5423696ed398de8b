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

#include "uavalloc/slot_problem.hpp"

#include <string>

namespace uavalloc {

void SlotProblem::validate() const {
  const int k = num_uavs();
  const int n = num_channels();
  if (k < 1 || n < k) throw ValidationError("slot problem: N >= K >= 1 violated");
  if (ei.rows() != k || ei.cols() != n) throw ValidationError("slot problem: EI must be K x N");
  if (weights.size() != k) throw ValidationError("slot problem: weights must have K entries");
  if (aci.w.rows() != n || aci.w.cols() != n || aci.w_hat.rows() != n || aci.w_hat.cols() != n) {
    throw ValidationError("slot problem: ACI matrix must be N x N");
  }
  if (!(gains.c.array() > 0.0).all() || !(gains.f_inv_sq.array() > 0.0).all()) {
    throw ValidationError("slot problem: gains must be positive");
  }
  if (!(ei.array() > 0.0).all()) throw ValidationError("slot problem: EI must be positive");
  if (!(weights.array() > 0.0).all()) throw ValidationError("slot problem: weights must be positive");
  if (!(p_max_mw > 0.0) || !std::isfinite(p_max_mw)) {
    throw ValidationError("slot problem: power budget must be positive and finite");
  }
}

SlotProblem make_slot_problem(const ScenarioConfig& cfg, int slot) {
  const SlotGeometry geom = slot_geometry(cfg, slot);
  SlotProblem prob;
  prob.gains.c.resize(cfg.num_uavs);
  for (int k = 0; k < cfg.num_uavs; ++k) {
    const double eta = cfg.link(k, slot) == LinkType::kLos ? cfg.eta_los_db : cfg.eta_nlos_db;
    prob.gains.c(k) = gain_coefficient(geom.distances_m(k), eta);
  }
  prob.gains.f_inv_sq = inverse_square<double>(geom.freqs_mhz);
  prob.ei = geom.ei_mw;
  prob.weights = cfg.weights;
  prob.p_max_mw = cfg.p_max_mw();
  prob.aci = build_aci_matrix<double>(geom.freqs_mhz, cfg.aci_profile, cfg.solver_knobs.w_diag_penalty);
  prob.validate();
  return prob;
}

SlotProblem make_slot_problem(const VectorXd& gain_coefficients, const VectorXd& freqs_mhz,
                              const MatrixXd& ei, const VectorXd& weights, double p_max_mw,
                              const AciProfile& profile, std::optional<double> w_diag_penalty) {
  SlotProblem prob;
  prob.gains.c = gain_coefficients;
  prob.gains.f_inv_sq = inverse_square<double>(freqs_mhz);
  prob.ei = ei;
  prob.weights = weights;
  prob.p_max_mw = p_max_mw;
  prob.aci = build_aci_matrix<double>(freqs_mhz, profile, w_diag_penalty);
  prob.validate();
  return prob;
}

SlotSolution evaluate_nullaci(const SlotProblem& prob, const Assignment& a, const VectorXd& power,
                              double common_sinr) {
  SlotSolution s;
  s.assignment = a;
  s.power = power;
  s.common_sinr = common_sinr;
  s.per_uav_sinr = sinr_nullaci<double>(a, power, prob.gains, prob.ei);
  s.weighted_sinr = s.per_uav_sinr.cwiseProduct(prob.weights);
  return s;
}

SlotSolution evaluate_aci(const SlotProblem& prob, const Assignment& a, const VectorXd& power,
                          double common_sinr) {
  SlotSolution s;
  s.assignment = a;
  s.power = power;
  s.common_sinr = common_sinr;
  s.per_uav_sinr = sinr_aci<double>(a, power, prob.gains, prob.aci.w, prob.ei);
  s.weighted_sinr = s.per_uav_sinr.cwiseProduct(prob.weights);
  return s;
}

}  // namespace uavalloc
