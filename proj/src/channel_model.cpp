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

#include "uavalloc/channel_model.hpp"

#include <algorithm>
#include <cmath>

namespace uavalloc {

void AciProfile::validate() const {
  if (kind == Kind::kExponential) {
    if (!(scale_mhz > 0.0) || !std::isfinite(scale_mhz)) {
      throw std::invalid_argument("aci profile: exponential scale must be positive");
    }
    return;
  }
  if (table.empty() || table.front().first != 0.0 || table.front().second != 1.0) {
    throw std::invalid_argument("aci profile: table must start at (0, 1)");
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto [sep, mu] = table[i];
    if (!(mu >= 0.0 && mu <= 1.0)) throw std::invalid_argument("aci profile: coefficient outside [0, 1]");
    if (i > 0) {
      if (!(sep > table[i - 1].first)) {
        throw std::invalid_argument("aci profile: separations must be strictly increasing");
      }
      if (mu > table[i - 1].second) throw std::invalid_argument("aci profile: coefficients must be nonincreasing");
    }
  }
}

double AciProfile::coefficient(double separation_mhz) const {
  const double sep = std::abs(separation_mhz);
  if (kind == Kind::kExponential) return std::exp(-sep / scale_mhz);
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (sep <= table[i].first) {
      const auto [s0, m0] = table[i - 1];
      const auto [s1, m1] = table[i];
      return m0 + (m1 - m0) * (sep - s0) / (s1 - s0);
    }
  }
  return sep == 0.0 ? 1.0 : 0.0;
}

double default_diag_penalty(const MatrixXd& w) {
  double max_off = 0.0;
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    for (Eigen::Index j = 0; j < w.cols(); ++j)
      if (i != j) max_off = std::max(max_off, w(i, j));
  // Floor keeps co-channel sharing penalized when leakage is negligible.
  return std::max(1e3 * max_off, 10.0);
}

}  // namespace uavalloc
