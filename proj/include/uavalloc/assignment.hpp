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

#include <string>
#include <vector>

#include "uavalloc/types.hpp"

namespace uavalloc {

/// Binary channel assignment for one slot: UAV k uses channel channel(k).
/// Construction enforces that every UAV holds exactly one channel and that no
/// channel is shared, so the N x K matrix form always has unit column sums and
/// row sums of at most one.
class Assignment {
 public:
  Assignment() = default;
  Assignment(int num_channels, std::vector<int> channel_of_uav);

  /// Accepts an N x K 0/1 matrix; throws std::invalid_argument when the
  /// matrix is not a feasible assignment.
  static Assignment from_matrix(const MatrixXd& a);

  int num_channels() const { return num_channels_; }
  int num_uavs() const { return static_cast<int>(channel_of_uav_.size()); }
  int channel(int uav) const { return channel_of_uav_[static_cast<std::size_t>(uav)]; }
  const std::vector<int>& channels() const { return channel_of_uav_; }

  template <typename Scalar = double>
  MatrixX<Scalar> matrix() const {
    MatrixX<Scalar> a = MatrixX<Scalar>::Zero(num_channels_, num_uavs());
    for (int k = 0; k < num_uavs(); ++k) a(channel(k), k) = Scalar(1);
    return a;
  }

  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  int num_channels_ = 0;
  std::vector<int> channel_of_uav_;
};

/// Column sums equal one and entries lie in [0, 1], within `tol`.
bool is_relaxed_feasible(const MatrixXd& a, double tol = 1e-9);

}  // namespace uavalloc
