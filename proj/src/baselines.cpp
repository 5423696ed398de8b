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

#include "uavalloc/baselines.hpp"

#include <stdexcept>
#include <vector>

#include "uavalloc/eig_power.hpp"
#include "uavalloc/nullaci_solver.hpp"

namespace uavalloc {

GreedyResult greedy_select(const MatrixXd& pcq) {
  const int n = static_cast<int>(pcq.rows());
  const int k_count = static_cast<int>(pcq.cols());
  if (k_count < 1 || n < k_count) throw std::invalid_argument("greedy_select: N >= K >= 1 violated");
  if (!pcq.allFinite()) throw std::invalid_argument("greedy_select: non-finite entry");
  std::vector<char> row_used(static_cast<std::size_t>(n), 0);
  std::vector<char> col_used(static_cast<std::size_t>(k_count), 0);
  std::vector<int> channel(static_cast<std::size_t>(k_count), -1);
  GreedyResult out;
  for (int round = 0; round < k_count; ++round) {
    int bi = -1;
    int bk = -1;
    for (int i = 0; i < n; ++i) {
      if (row_used[static_cast<std::size_t>(i)]) continue;
      for (int k = 0; k < k_count; ++k) {
        if (col_used[static_cast<std::size_t>(k)]) continue;
        if (bi < 0 || pcq(i, k) < pcq(bi, bk)) {
          bi = i;
          bk = k;
        }
      }
    }
    row_used[static_cast<std::size_t>(bi)] = 1;
    col_used[static_cast<std::size_t>(bk)] = 1;
    channel[static_cast<std::size_t>(bk)] = bi;
    out.xi += pcq(bi, bk);
  }
  out.assignment = Assignment(n, std::move(channel));
  return out;
}

SlotSolution greedy_solve(const SlotProblem& prob) {
  prob.validate();
  const GreedyResult g = greedy_select(prob.pcq());
  const double gamma_bar = prob.p_max_mw / g.xi;
  const VectorXd phi = selected_pcq(prob.pcq(), g.assignment);
  return evaluate_nullaci(prob, g.assignment, power_from_common_sinr(gamma_bar, phi), gamma_bar);
}

Assignment random_assignment(Rng& rng, int num_channels, int num_uavs) {
  if (num_uavs < 1 || num_channels < num_uavs) throw std::invalid_argument("random_assignment: N >= K >= 1 violated");
  return Assignment(num_channels, rng.partial_permutation(num_channels, num_uavs));
}

SlotSolution baseline1_solve(const SlotProblem& prob, const Assignment& random) {
  prob.validate();
  return nullaci_fixed_assignment(prob, random);
}

SlotSolution baseline2_solve(const SlotProblem& prob) {
  return eig_power_fixed_assignment(prob, solve_nullaci_slot(prob).assignment);
}

SlotSolution baseline3_solve(const SlotProblem& prob, const Assignment& random) {
  prob.validate();
  return eig_power_fixed_assignment(prob, random);
}

SlotSolution upper_bound_solve(const SlotProblem& prob) { return solve_nullaci_slot(prob); }

}  // namespace uavalloc
