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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "uavalloc/assignment.hpp"
#include "uavalloc/rng.hpp"
#include "uavalloc/units.hpp"

using namespace uavalloc;

TEST(Units, DbmRoundTripOverTwentyDecades) {
  for (double e = -9.0; e <= 9.0; e += 0.37) {
    const double x = std::pow(10.0, e) * 1.2345;
    EXPECT_NEAR(dbm_to_mw(mw_to_dbm(x)) / x, 1.0, 1e-12) << x;
  }
}

TEST(Units, KnownPoints) {
  EXPECT_DOUBLE_EQ(dbm_to_mw(30.0), 1000.0);
  EXPECT_DOUBLE_EQ(dbm_to_mw(-10.0), 0.1);
  EXPECT_DOUBLE_EQ(mw_to_dbm(1.0), 0.0);
}

TEST(Rng, SameSeedAndStreamRepeat) {
  Rng a(42, 4);
  Rng b(42, 4);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.uniform(), b.uniform());
}

TEST(Rng, StreamsDiffer) {
  Rng a(42, 1);
  Rng b(42, 2);
  int same = 0;
  for (int i = 0; i < 100; ++i) same += a.uniform() == b.uniform();
  EXPECT_EQ(same, 0);
}

TEST(Rng, UniformStaysInRange) {
  Rng r(7);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const int k = r.uniform_int(5);
    EXPECT_GE(k, 0);
    EXPECT_LT(k, 5);
  }
}

TEST(Rng, PartialPermutationIsInjective) {
  Rng r(3);
  for (int t = 0; t < 200; ++t) {
    const auto p = r.partial_permutation(9, 5);
    ASSERT_EQ(p.size(), 5u);
    EXPECT_EQ(std::set<int>(p.begin(), p.end()).size(), 5u);
    for (int v : p) EXPECT_LT(v, 9);
  }
}

TEST(Assignment, MatrixRoundTrip) {
  const Assignment a(4, {2, 0, 3});
  const MatrixXd m = a.matrix();
  EXPECT_EQ(m.rows(), 4);
  EXPECT_EQ(m.cols(), 3);
  EXPECT_TRUE((m.colwise().sum().array() == 1.0).all());
  EXPECT_TRUE((m.rowwise().sum().array() <= 1.0).all());
  EXPECT_EQ(Assignment::from_matrix(m), a);
}

TEST(Assignment, RejectsSharedChannel) { EXPECT_THROW(Assignment(3, {1, 1}), std::invalid_argument); }

TEST(Assignment, RejectsOutOfRange) { EXPECT_THROW(Assignment(2, {0, 2}), std::invalid_argument); }

TEST(Assignment, RejectsNonBinaryMatrix) {
  MatrixXd m(2, 1);
  m << 0.5, 0.5;
  EXPECT_THROW(Assignment::from_matrix(m), std::invalid_argument);
}

TEST(Assignment, RelaxedFeasibility) {
  MatrixXd m(2, 2);
  m << 0.3, 1.0, 0.7, 0.0;
  EXPECT_TRUE(is_relaxed_feasible(m));
  m(0, 0) = 0.4;
  EXPECT_FALSE(is_relaxed_feasible(m));
}
