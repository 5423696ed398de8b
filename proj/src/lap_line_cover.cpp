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

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lap_internal.hpp"
#include "uavalloc/lap.hpp"

namespace uavalloc {

namespace {

using Index = Eigen::Index;

// Maximum matching on the exact zeros of `m` (rows to columns), Kuhn's method.
class ZeroMatching {
 public:
  explicit ZeroMatching(const MatrixXd& m)
      : m_(m),
        n_(static_cast<int>(m.rows())),
        row_of_col_(static_cast<std::size_t>(n_), -1),
        col_of_row_(static_cast<std::size_t>(n_), -1) {
    for (int i = 0; i < n_; ++i) {
      std::vector<char> visited(static_cast<std::size_t>(n_), 0);
      if (augment(i, visited)) ++size_;
    }
  }

  int size() const { return size_; }
  int col_of_row(int i) const { return col_of_row_[static_cast<std::size_t>(i)]; }
  int row_of_col(int j) const { return row_of_col_[static_cast<std::size_t>(j)]; }

 private:
  bool augment(int i, std::vector<char>& visited) {
    for (int j = 0; j < n_; ++j) {
      if (m_(i, j) != 0.0 || visited[static_cast<std::size_t>(j)]) continue;
      visited[static_cast<std::size_t>(j)] = 1;
      const int owner = row_of_col_[static_cast<std::size_t>(j)];
      if (owner < 0 || augment(owner, visited)) {
        row_of_col_[static_cast<std::size_t>(j)] = i;
        col_of_row_[static_cast<std::size_t>(i)] = j;
        return true;
      }
    }
    return false;
  }

  const MatrixXd& m_;
  int n_;
  int size_ = 0;
  std::vector<int> row_of_col_;
  std::vector<int> col_of_row_;
};

struct LineCover {
  std::vector<char> row;
  std::vector<char> col;
};

// Koenig: rows reachable from unmatched rows by alternating paths stay
// uncovered, reached columns are covered.
LineCover minimum_cover(const MatrixXd& m, const ZeroMatching& match) {
  const int n = static_cast<int>(m.rows());
  std::vector<char> reach_row(static_cast<std::size_t>(n), 0);
  std::vector<char> reach_col(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    if (match.col_of_row(i) < 0) {
      reach_row[static_cast<std::size_t>(i)] = 1;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (m(i, j) != 0.0 || reach_col[static_cast<std::size_t>(j)]) continue;
      reach_col[static_cast<std::size_t>(j)] = 1;
      const int owner = match.row_of_col(j);
      if (owner >= 0 && !reach_row[static_cast<std::size_t>(owner)]) {
        reach_row[static_cast<std::size_t>(owner)] = 1;
        stack.push_back(owner);
      }
    }
  }
  LineCover cover;
  cover.row.resize(static_cast<std::size_t>(n));
  cover.col = reach_col;
  for (int i = 0; i < n; ++i) cover.row[static_cast<std::size_t>(i)] = !reach_row[static_cast<std::size_t>(i)];
  return cover;
}

}  // namespace

LapResult solve_lap_line_cover(const MatrixXd& cost) {
  detail::check_cost_matrix(cost);
  const int n = static_cast<int>(cost.rows());
  const int k = static_cast<int>(cost.cols());
  MatrixXd m = MatrixXd::Zero(n, n);
  m.leftCols(k) = cost;

  // Step 1: row reduction.
  for (int i = 0; i < n; ++i) m.row(i).array() -= m.row(i).minCoeff();
  // Step 2: column reduction.
  for (int j = 0; j < n; ++j) m.col(j).array() -= m.col(j).minCoeff();

  const int max_rounds = 4 * n * n + 16;
  for (int round = 0; round < max_rounds; ++round) {
    // Step 3: cover every zero with the fewest lines.
    const ZeroMatching match(m);
    if (match.size() == n) {
      // Step 5: a full set of independent zeros.
      std::vector<int> channel_of_uav(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j) channel_of_uav[static_cast<std::size_t>(j)] = match.row_of_col(j);
      const double total = detail::assignment_cost(cost, channel_of_uav);
      return {Assignment(n, std::move(channel_of_uav)), total};
    }
    const LineCover cover = minimum_cover(m, match);

    // Step 4: shift by the smallest uncovered entry.
    double h = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (cover.row[static_cast<std::size_t>(i)]) continue;
      for (int j = 0; j < n; ++j) {
        if (!cover.col[static_cast<std::size_t>(j)]) h = std::min(h, m(i, j));
      }
    }
    for (int i = 0; i < n; ++i) {
      const bool row_covered = cover.row[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j) {
        const bool col_covered = cover.col[static_cast<std::size_t>(j)];
        if (!row_covered && !col_covered) {
          m(i, j) -= h;
        } else if (row_covered && col_covered) {
          m(i, j) += h;
        }
      }
    }
  }
  throw std::logic_error("solve_lap_line_cover: no progress");
}

}  // namespace uavalloc
