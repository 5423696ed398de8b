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

// Independent reference implementations used only by tests. None of these
// call into the production solvers they check.

#include <cstdint>
#include <functional>
#include <vector>

#include "uavalloc/rng.hpp"
#include "uavalloc/slot_problem.hpp"
#include "uavalloc/types.hpp"

namespace uavalloc::testing {

/// Calls `visit` with every injective map of K UAVs onto N channels, in
/// lexicographic order of the channel list.
void for_each_injection(int num_channels, int num_uavs, const std::function<void(const std::vector<int>&)>& visit);

struct BruteForceLap {
  std::vector<int> channels;
  double cost = 0.0;
};

/// Exhaustive minimum; costs are summed in UAV order, first minimum wins.
BruteForceLap brute_force_lap(const MatrixXd& cost);

/// Sort-and-threshold projection onto the probability simplex.
VectorXd sort_projection(const VectorXd& y);

/// Central differences of `f` at `a`, one entry at a time.
MatrixXd finite_difference_gradient(const std::function<double(const MatrixXd&)>& f, const MatrixXd& a, double h);

/// Largest delta for which (I - delta R) p = delta h has a nonnegative
/// solution with sum p <= P, by bisection.
double bisection_delta(const MatrixXd& r, const VectorXd& h, double p_max);

/// Max-min weighted SINR of a fixed assignment with the leakage-free
/// closed form, evaluated straight from the definitions.
double nullaci_value_direct(const SlotProblem& prob, const std::vector<int>& channels);

/// Uniform random matrix with entries in [lo, hi).
MatrixXd random_matrix(Rng& rng, int rows, int cols, double lo, double hi);

/// Random strictly interior point of the product of column simplices.
MatrixXd random_relaxed(Rng& rng, int n, int k);

/// Random slot problem with ACI and EI of comparable strength.
SlotProblem random_aci_problem(Rng& rng, int num_uavs, int num_channels);

/// Random slot problem with realistic path-loss magnitudes.
SlotProblem random_physical_problem(Rng& rng, int num_uavs, int num_channels);

/// Spearman rank correlation (average ranks on ties).
double spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace uavalloc::testing
