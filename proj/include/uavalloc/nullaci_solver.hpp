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
#include "uavalloc/slot_problem.hpp"
#include "uavalloc/types.hpp"

namespace uavalloc {

/// p_k = gamma_bar * phi_k.
VectorXd power_from_common_sinr(double gamma_bar, const VectorXd& pcq_selected);

/// phi^{n(k)}_k for each UAV k.
VectorXd selected_pcq(const MatrixXd& pcq, const Assignment& a);

/// Closed-form leakage-free power for a fixed assignment: every prioritized
/// SINR equals P_max / sum_k phi_k and the whole budget is spent.
SlotSolution nullaci_fixed_assignment(const SlotProblem& prob, const Assignment& a);

/// Exact leakage-free optimum: Hungarian assignment on the PCQ matrix plus the
/// closed-form power above.
SlotSolution solve_nullaci_slot(const SlotProblem& prob);

}  // namespace uavalloc
