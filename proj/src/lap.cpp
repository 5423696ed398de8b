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

#include "uavalloc/lap.hpp"

#include "lap_internal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace uavalloc {

namespace detail {

void check_cost_matrix(const MatrixXd& cost) {
  if (cost.cols() < 1) throw std::invalid_argument("lap: need at least one UAV");
  if (cost.rows() < cost.cols()) throw std::invalid_argument("lap: fewer channels than UAVs (N < K)");
  if (!cost.allFinite()) throw std::invalid_argument("lap: cost matrix has non-finite entries");
}

double assignment_cost(const MatrixXd& cost, const std::vector<int>& channel_of_uav) {
  double total = 0.0;
  for (std::size_t k = 0; k < channel_of_uav.size(); ++k) {
    total += cost(channel_of_uav[k], static_cast<Eigen::Index>(k));
  }
  return total;
}

}  // namespace detail

namespace {

using Index = Eigen::Index;

struct DualSolution {
  std::vector<int> col_of_row;  // square: row (UAV or dummy) -> channel
  VectorXd u;
  VectorXd v;
};

// Rows are UAVs followed by zero-cost dummies, columns are channels.
DualSolution hungarian_square(const MatrixXd& a) {
  const Index n = a.rows();
  const double inf = std::numeric_limits<double>::infinity();
  VectorXd u = VectorXd::Zero(n + 1);
  VectorXd v = VectorXd::Zero(n + 1);
  std::vector<Index> row_of_col(static_cast<std::size_t>(n + 1), 0);
  std::vector<Index> way(static_cast<std::size_t>(n + 1), 0);
  for (Index i = 1; i <= n; ++i) {
    row_of_col[0] = i;
    Index j0 = 0;
    std::vector<double> minv(static_cast<std::size_t>(n + 1), inf);
    std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
    do {
      used[static_cast<std::size_t>(j0)] = 1;
      const Index i0 = row_of_col[static_cast<std::size_t>(j0)];
      double delta = inf;
      Index j1 = 0;
      for (Index j = 1; j <= n; ++j) {
        const auto js = static_cast<std::size_t>(j);
        if (used[js]) continue;
        const double cur = a(i0 - 1, j - 1) - u(i0) - v(j);
        if (cur < minv[js]) {
          minv[js] = cur;
          way[js] = j0;
        }
        if (minv[js] < delta) {
          delta = minv[js];
          j1 = j;
        }
      }
      for (Index j = 0; j <= n; ++j) {
        const auto js = static_cast<std::size_t>(j);
        if (used[js]) {
          u(row_of_col[js]) += delta;
          v(j) -= delta;
        } else {
          minv[js] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[static_cast<std::size_t>(j0)] != 0);
    do {
      const Index j1 = way[static_cast<std::size_t>(j0)];
      row_of_col[static_cast<std::size_t>(j0)] = row_of_col[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }
  DualSolution out;
  out.col_of_row.assign(static_cast<std::size_t>(n), -1);
  for (Index j = 1; j <= n; ++j) {
    out.col_of_row[static_cast<std::size_t>(row_of_col[static_cast<std::size_t>(j)] - 1)] = static_cast<int>(j - 1);
  }
  out.u = u.tail(n);
  out.v = v.tail(n);
  return out;
}

// Walks UAVs in order and moves each to the smallest channel that still admits
// a perfect matching on the tight (zero reduced cost) edges, given the choices
// already fixed for earlier UAVs.
std::vector<int> lexicographic_refine(const MatrixXd& a, const DualSolution& dual, int num_uavs) {
  const int n = static_cast<int>(a.rows());
  double scale = 1.0;
  if (a.size() > 0) scale = std::max(scale, a.cwiseAbs().maxCoeff());
  const double eps = 1e-10 * scale;
  auto tight = [&](int i, int j) { return a(i, j) - dual.u(i) - dual.v(j) <= eps; };

  std::vector<int> col_of_row = dual.col_of_row;
  std::vector<int> row_of_col(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) row_of_col[static_cast<std::size_t>(col_of_row[static_cast<std::size_t>(i)])] = i;
  std::vector<char> fixed_col(static_cast<std::size_t>(n), 0);
  std::vector<int> parent_row(static_cast<std::size_t>(n));
  std::vector<int> queue;

  for (int k = 0; k < num_uavs; ++k) {
    const int current = col_of_row[static_cast<std::size_t>(k)];
    for (int c = 0; c < n; ++c) {
      if (fixed_col[static_cast<std::size_t>(c)] || !tight(k, c)) continue;
      if (c == current) break;
      // Free `current` for the row that holds `c`, via tight alternating edges.
      const int start = row_of_col[static_cast<std::size_t>(c)];
      std::fill(parent_row.begin(), parent_row.end(), -1);
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      queue.assign(1, start);
      bool found = false;
      for (std::size_t head = 0; head < queue.size() && !found; ++head) {
        const int r = queue[head];
        for (int j = 0; j < n; ++j) {
          const auto js = static_cast<std::size_t>(j);
          if (seen[js] || fixed_col[js] || j == c || !tight(r, j)) continue;
          seen[js] = 1;
          parent_row[js] = r;
          if (j == current) {
            found = true;
            break;
          }
          queue.push_back(row_of_col[js]);
        }
      }
      if (!found) continue;
      int j = current;
      while (true) {
        const int r = parent_row[static_cast<std::size_t>(j)];
        const int prev = col_of_row[static_cast<std::size_t>(r)];
        col_of_row[static_cast<std::size_t>(r)] = j;
        row_of_col[static_cast<std::size_t>(j)] = r;
        if (r == start) break;
        j = prev;
      }
      col_of_row[static_cast<std::size_t>(k)] = c;
      row_of_col[static_cast<std::size_t>(c)] = k;
      break;
    }
    fixed_col[static_cast<std::size_t>(col_of_row[static_cast<std::size_t>(k)])] = 1;
  }
  col_of_row.resize(static_cast<std::size_t>(num_uavs));
  return col_of_row;
}

}  // namespace

LapResult solve_lap(const MatrixXd& cost) {
  detail::check_cost_matrix(cost);
  const int n = static_cast<int>(cost.rows());
  const int k = static_cast<int>(cost.cols());
  MatrixXd a = MatrixXd::Zero(n, n);
  a.topRows(k) = cost.transpose();

  const DualSolution dual = hungarian_square(a);
  std::vector<int> direct(dual.col_of_row.begin(), dual.col_of_row.begin() + k);
  const double direct_cost = detail::assignment_cost(cost, direct);

  std::vector<int> refined = lexicographic_refine(a, dual, k);
  const double refined_cost = detail::assignment_cost(cost, refined);
  if (refined_cost > direct_cost) return {Assignment(n, std::move(direct)), direct_cost};
  return {Assignment(n, std::move(refined)), refined_cost};
}

}  // namespace uavalloc
