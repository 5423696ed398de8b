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
#include "uavalloc/rng.hpp"
#include "uavalloc/slot_problem.hpp"
#include "uavalloc/types.hpp"

namespace uavalloc {

struct GreedyResult {
  Assignment assignment;
  /// Sum of the picked PCQ entries.
  double xi = 0.0;
};

/// K rounds of: take the smallest remaining PCQ entry (first in row-major
/// order on ties), then delete its row and column.
GreedyResult greedy_select(const MatrixXd& pcq);

/// Greedy assignment with the closed-form leakage-free power.
SlotSolution greedy_solve(const SlotProblem& prob);

/// Uniformly random injective channel map.
Assignment random_assignment(Rng& rng, int num_channels, int num_uavs);

/// Random assignment, closed-form leakage-free power and SINR.
SlotSolution baseline1_solve(const SlotProblem& prob, const Assignment& random);
/// Hungarian assignment, eigen power, physical ACI SINR.
SlotSolution baseline2_solve(const SlotProblem& prob);
/// Random assignment, eigen power, physical ACI SINR.
SlotSolution baseline3_solve(const SlotProblem& prob, const Assignment& random);
/// Leakage-free optimum evaluated without ACI.
SlotSolution upper_bound_solve(const SlotProblem& prob);

}  // namespace uavalloc
