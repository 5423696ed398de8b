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

#include "uavalloc/nullaci_solver.hpp"

#include <cmath>
#include <stdexcept>

#include "uavalloc/lap.hpp"

namespace uavalloc {

VectorXd power_from_common_sinr(double gamma_bar, const VectorXd& pcq_selected) {
  if (!(gamma_bar > 0.0) || !std::isfinite(gamma_bar)) {
    throw std::invalid_argument("power_from_common_sinr: common SINR must be positive");
  }
  if (pcq_selected.size() == 0 || !(pcq_selected.array() > 0.0).all()) {
    throw std::invalid_argument("power_from_common_sinr: PCQ entries must be positive");
  }
  return gamma_bar * pcq_selected;
}

VectorXd selected_pcq(const MatrixXd& pcq, const Assignment& a) {
  if (pcq.rows() != a.num_channels() || pcq.cols() != a.num_uavs()) {
    throw std::invalid_argument("selected_pcq: dimension mismatch");
  }
  VectorXd phi(a.num_uavs());
  for (int k = 0; k < a.num_uavs(); ++k) phi(k) = pcq(a.channel(k), k);
  return phi;
}

SlotSolution nullaci_fixed_assignment(const SlotProblem& prob, const Assignment& a) {
  const VectorXd phi = selected_pcq(prob.pcq(), a);
  const double gamma_bar = prob.p_max_mw / phi.sum();
  return evaluate_nullaci(prob, a, power_from_common_sinr(gamma_bar, phi), gamma_bar);
}

SlotSolution solve_nullaci_slot(const SlotProblem& prob) {
  prob.validate();
  const LapResult lap = solve_lap(prob.pcq());
  return nullaci_fixed_assignment(prob, lap.assignment);
}

}  // namespace uavalloc
