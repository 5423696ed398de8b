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

#include <cmath>

namespace uavalloc {

template <typename Scalar>
Scalar db_to_linear(Scalar db) {
  using std::pow;
  return pow(Scalar(10), db / Scalar(10));
}

template <typename Scalar>
Scalar linear_to_db(Scalar x) {
  using std::log10;
  return Scalar(10) * log10(x);
}

/// dBm and mW share the dB mapping (0 dBm == 1 mW).
template <typename Scalar>
Scalar dbm_to_mw(Scalar dbm) {
  return db_to_linear(dbm);
}

template <typename Scalar>
Scalar mw_to_dbm(Scalar mw) {
  return linear_to_db(mw);
}

}  // namespace uavalloc
