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
#include "uavalloc/types.hpp"

namespace uavalloc {

struct LapResult {
  Assignment assignment;
  /// Sum of the selected entries, accumulated in UAV order.
  double total_cost = 0.0;
};

/// Minimum-cost injective map from the K columns (UAVs) to the N rows
/// (channels) of an N x K cost matrix. Shortest augmenting path Hungarian
/// method, O(N^2 K). Among optimal assignments the one whose channel list is
/// lexicographically smallest is returned.
LapResult solve_lap(const MatrixXd& cost);

/// Reference implementation of the textbook line-covering procedure (row and
/// column reduction, minimum line cover, shift by the smallest uncovered
/// entry, independent-zero selection) on the zero-padded square matrix.
/// Intended for cross-checking on small instances.
LapResult solve_lap_line_cover(const MatrixXd& cost);

}  // namespace uavalloc
