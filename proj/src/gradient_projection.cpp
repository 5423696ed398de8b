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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "uavalloc/aci_solver.hpp"

namespace uavalloc {

GpResult gradient_projection_assignment(const MatrixXd& a0, const VectorXd& p, const SlotProblem& prob,
                                        const SmoothedObjectiveParams<double>& params, const GpOptions& opts) {
  if (!is_relaxed_feasible(a0, 1e-9)) throw std::invalid_argument("gradient projection: A0 is not feasible");
  if (!(opts.scale > 0.0) || !std::isfinite(opts.scale)) {
    throw std::invalid_argument("gradient projection: scale must be positive");
  }
  auto objective = [&](const MatrixXd& a) {
    return smoothed_objective<double>(a, p, prob.gains, params, prob.ei, prob.weights);
  };

  GpResult res;
  res.a = a0;
  double f = objective(res.a);
  res.trace.objective.push_back(f);
  for (int it = 1; it <= opts.max_iter; ++it) {
    res.trace.iterations = it;
    const MatrixXd grad = grad_smoothed_objective<double>(res.a, p, prob.gains, params, prob.ei, prob.weights);
    const MatrixXd dir = project_columns_to_simplex<double>(res.a - grad / opts.scale) - res.a;
    if (dir.cwiseAbs().maxCoeff() <= 1e-12) {
      res.trace.stationary = true;
      break;
    }
    const double slope = grad.cwiseProduct(dir).sum();
    double alpha = opts.armijo.initial_step;
    bool accepted = false;
    MatrixXd next;
    double f_next = f;
    for (int b = 0; b <= opts.armijo.max_backtracks; ++b) {
      next = res.a + alpha * dir;
      f_next = objective(next);
      if (f_next <= f + opts.armijo.slope * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= opts.armijo.shrink;
      ++res.trace.backtracks;
    }
    if (!accepted) break;
    const double change = f - f_next;
    res.a = next;
    f = f_next;
    res.trace.objective.push_back(f);
    if (std::abs(change) <= opts.tol * opts.scale) break;
  }
  return res;
}

Assignment round_assignment(const MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  const int k_count = static_cast<int>(a.cols());
  if (n < k_count) throw std::invalid_argument("round_assignment: fewer channels than UAVs (N < K)");
  if (!a.allFinite()) throw std::invalid_argument("round_assignment: non-finite entry");

  std::vector<int> best(static_cast<std::size_t>(k_count));
  std::vector<double> margin(static_cast<std::size_t>(k_count));
  for (int k = 0; k < k_count; ++k) {
    int top = 0;
    for (int i = 1; i < n; ++i)
      if (a(i, k) > a(top, k)) top = i;
    double second = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
      if (i != top) second = std::max(second, a(i, k));
    best[static_cast<std::size_t>(k)] = top;
    margin[static_cast<std::size_t>(k)] = n > 1 ? a(top, k) - second : a(top, k);
  }

  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<int> losers;
  for (int k = 0; k < k_count; ++k) {
    int& o = owner[static_cast<std::size_t>(best[static_cast<std::size_t>(k)])];
    if (o < 0) {
      o = k;
    } else if (margin[static_cast<std::size_t>(k)] > margin[static_cast<std::size_t>(o)]) {
      losers.push_back(o);
      o = k;
    } else {
      losers.push_back(k);
    }
  }
  std::stable_sort(losers.begin(), losers.end(), [&](int x, int y) {
    const double mx = margin[static_cast<std::size_t>(x)];
    const double my = margin[static_cast<std::size_t>(y)];
    return mx != my ? mx > my : x < y;
  });

  std::vector<int> channel(static_cast<std::size_t>(k_count), -1);
  for (int i = 0; i < n; ++i)
    if (owner[static_cast<std::size_t>(i)] >= 0) channel[static_cast<std::size_t>(owner[static_cast<std::size_t>(i)])] = i;
  for (int k : losers) {
    int pick = -1;
    for (int i = 0; i < n; ++i) {
      if (owner[static_cast<std::size_t>(i)] >= 0) continue;
      if (pick < 0 || a(i, k) > a(pick, k)) pick = i;
    }
    owner[static_cast<std::size_t>(pick)] = k;
    channel[static_cast<std::size_t>(k)] = pick;
  }
  return Assignment(n, std::move(channel));
}

}  // namespace uavalloc
