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

/// Max-min weighted SINR power control for a fixed assignment.
///
///   weighted SINR_k = b(k,k) p_k / (sum_{m != k} b(k,m) p_m + noise_k)
///
/// With R = b / diag(b) (zero diagonal) and h = noise / diag(b), the optimum
/// has every weighted SINR equal to delta and sum p = P_max, i.e.
///
///   [p; 1] is the Perron vector of [[R, h], [1^T R / P, 1^T h / P]]
///
/// with eigenvalue 1 / delta.
struct EigPowerProblem {
  MatrixXd b;      // K x K; diagonal carries the priority weight
  VectorXd noise;  // K
  double p_max = 1.0;

  /// b(k,k) = alpha_k c_k f_{n_k}^-2, b(k,m) = W(n_k, n_m) c_k f_{n_m}^-2,
  /// noise_k = EI(k, n_k), using the physical ACI matrix.
  static EigPowerProblem from_assignment(const SlotProblem& prob, const Assignment& a);

  void validate() const;
  int size() const { return static_cast<int>(noise.size()); }
  MatrixXd r() const;
  VectorXd h() const;
  /// The (K+1) x (K+1) nonnegative matrix C^{-1} B.
  MatrixXd block_matrix() const;
};

struct EigPowerOptions {
  int max_power_iterations = 5000;
  double power_tol = 1e-13;
};

struct EigPowerResult {
  VectorXd power;
  double delta = 0.0;
  int iterations = 0;
  bool used_fallback = false;
};

/// Power iteration on the block matrix, dense eigensolver fallback when it
/// stalls, then Newton refinement of the secular equation
/// 1^T (lambda I - R)^{-1} h = P. Throws ConvergenceError if no positive
/// solution is found.
EigPowerResult eig_power_alloc(const EigPowerProblem& prob, const EigPowerOptions& opts = {});

/// Eigen power for a fixed assignment, evaluated with the physical ACI model.
SlotSolution eig_power_fixed_assignment(const SlotProblem& prob, const Assignment& a);

}  // namespace uavalloc
