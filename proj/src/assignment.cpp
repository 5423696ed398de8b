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

#include "uavalloc/assignment.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace uavalloc {

Assignment::Assignment(int num_channels, std::vector<int> channel_of_uav)
    : num_channels_(num_channels), channel_of_uav_(std::move(channel_of_uav)) {
  if (num_channels_ < num_uavs()) {
    throw std::invalid_argument("assignment: fewer channels than UAVs");
  }
  std::vector<bool> used(static_cast<std::size_t>(num_channels_), false);
  for (int n : channel_of_uav_) {
    if (n < 0 || n >= num_channels_) {
      throw std::invalid_argument("assignment: channel index out of range");
    }
    if (used[static_cast<std::size_t>(n)]) {
      throw std::invalid_argument("assignment: channel " + std::to_string(n) +
                                  " assigned to more than one UAV");
    }
    used[static_cast<std::size_t>(n)] = true;
  }
}

Assignment Assignment::from_matrix(const MatrixXd& a) {
  std::vector<int> channels(static_cast<std::size_t>(a.cols()), -1);
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    for (Eigen::Index n = 0; n < a.rows(); ++n) {
      const double v = a(n, k);
      if (v == 1.0) {
        if (channels[static_cast<std::size_t>(k)] != -1) {
          throw std::invalid_argument("assignment: UAV " + std::to_string(k) +
                                      " holds more than one channel");
        }
        channels[static_cast<std::size_t>(k)] = static_cast<int>(n);
      } else if (v != 0.0) {
        throw std::invalid_argument("assignment: entries must be 0 or 1");
      }
    }
    if (channels[static_cast<std::size_t>(k)] == -1) {
      throw std::invalid_argument("assignment: UAV " + std::to_string(k) + " holds no channel");
    }
  }
  return Assignment(static_cast<int>(a.rows()), std::move(channels));
}

std::string Assignment::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int k = 0; k < num_uavs(); ++k) os << (k ? " " : "") << channel(k);
  os << ']';
  return os.str();
}

bool is_relaxed_feasible(const MatrixXd& a, double tol) {
  if (!a.allFinite()) return false;
  if ((a.array() < -tol).any() || (a.array() > 1.0 + tol).any()) return false;
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    if (std::abs(a.col(k).sum() - 1.0) > tol) return false;
  }
  return true;
}

}  // namespace uavalloc
