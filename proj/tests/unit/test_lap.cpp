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

#include <chrono>

#include "oracles.hpp"
#include "uavalloc/lap.hpp"

using namespace uavalloc;
using uavalloc::testing::brute_force_lap;
using uavalloc::testing::random_matrix;

TEST(Lap, TwoByTwoDiagonal) {
  MatrixXd c(2, 2);
  c << 1, 2, 2, 1;
  const LapResult r = solve_lap(c);
  EXPECT_EQ(r.assignment.channels(), (std::vector<int>{0, 1}));
  EXPECT_EQ(r.total_cost, 2.0);
}

TEST(Lap, TwoByTwoAvoidsGreedyTrap) {
  MatrixXd c(2, 2);
  c << 1, 2, 2, 100;
  const LapResult r = solve_lap(c);
  EXPECT_EQ(r.assignment.channels(), (std::vector<int>{1, 0}));
  EXPECT_EQ(r.total_cost, 4.0);
  EXPECT_EQ(solve_lap_line_cover(c).total_cost, 4.0);
}

TEST(Lap, MatchesBruteForceOnEightBySix) {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const MatrixXd c = random_matrix(rng, 8, 6, 0.0, 10.0);
    const auto ref = brute_force_lap(c);
    const LapResult r = solve_lap(c);
    EXPECT_EQ(r.total_cost, ref.cost) << t;
  }
}

TEST(Lap, MatchesBruteForceOnMixedShapes) {
  Rng rng(22);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + rng.uniform_int(8);
    const int k = 1 + rng.uniform_int(std::min(n, 6));
    const MatrixXd c = random_matrix(rng, n, k, 0.0, 1.0);
    const auto ref = brute_force_lap(c);
    EXPECT_EQ(solve_lap(c).total_cost, ref.cost);
    EXPECT_EQ(solve_lap_line_cover(c).total_cost, ref.cost);
  }
}

TEST(Lap, TiesResolveToLexicographicallySmallest) {
  Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + rng.uniform_int(6);
    const int k = 1 + rng.uniform_int(std::min(n, 5));
    MatrixXd c(n, k);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < n; ++i) c(i, j) = rng.uniform_int(3);
    const auto ref = brute_force_lap(c);
    const LapResult r = solve_lap(c);
    EXPECT_EQ(r.total_cost, ref.cost);
    EXPECT_EQ(r.assignment.channels(), ref.channels) << t;
  }
}

TEST(Lap, AllEqualCostsGiveIdentity) {
  const LapResult r = solve_lap(MatrixXd::Constant(5, 3, 2.5));
  EXPECT_EQ(r.assignment.channels(), (std::vector<int>{0, 1, 2}));
}

TEST(Lap, OutputIsFeasible) {
  Rng rng(24);
  for (int t = 0; t < 100; ++t) {
    const MatrixXd c = random_matrix(rng, 10, 7, -5.0, 5.0);
    const MatrixXd a = solve_lap(c).assignment.matrix();
    EXPECT_TRUE((a.colwise().sum().array() == 1.0).all());
    EXPECT_TRUE((a.rowwise().sum().array() <= 1.0).all());
  }
}

TEST(Lap, ArgminInvariantUnderRowAndColumnShifts) {
  Rng rng(25);
  for (int t = 0; t < 100; ++t) {
    const MatrixXd c = random_matrix(rng, 6, 6, 0.0, 1.0);
    MatrixXd shifted = c;
    shifted.row(rng.uniform_int(6)).array() += rng.uniform(-3.0, 3.0);
    shifted.col(rng.uniform_int(6)).array() += rng.uniform(-3.0, 3.0);
    EXPECT_EQ(solve_lap(c).assignment, solve_lap(shifted).assignment);
  }
}

TEST(Lap, ColumnShiftKeepsArgminWhenRectangular) {
  Rng rng(26);
  for (int t = 0; t < 100; ++t) {
    const MatrixXd c = random_matrix(rng, 7, 4, 0.0, 1.0);
    MatrixXd shifted = c;
    shifted.col(rng.uniform_int(4)).array() += rng.uniform(-3.0, 3.0);
    EXPECT_EQ(solve_lap(c).assignment, solve_lap(shifted).assignment);
  }
}

TEST(Lap, LargeInstanceIsFast) {
  Rng rng(27);
  const MatrixXd c = random_matrix(rng, 64, 64, 0.0, 1.0);
  const auto t0 = std::chrono::steady_clock::now();
  const LapResult r = solve_lap(c);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_LT(secs, 1.0);
  EXPECT_EQ(r.assignment.num_uavs(), 64);
}

TEST(Lap, RejectsBadInput) {
  EXPECT_THROW(solve_lap(MatrixXd::Zero(2, 3)), std::invalid_argument);
  MatrixXd c = MatrixXd::Zero(2, 2);
  c(0, 1) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(solve_lap(c), std::invalid_argument);
  EXPECT_THROW(solve_lap_line_cover(c), std::invalid_argument);
}

TEST(LineCover, AgreesWithProductionSolver) {
  Rng rng(28);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + rng.uniform_int(8);
    const int k = 1 + rng.uniform_int(std::min(n, 6));
    const MatrixXd c = random_matrix(rng, n, k, 0.0, 100.0);
    EXPECT_EQ(solve_lap_line_cover(c).total_cost, solve_lap(c).total_cost);
  }
}
