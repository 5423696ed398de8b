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

#include "uavalloc/eig_power.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "uavalloc/errors.hpp"

namespace uavalloc {

EigPowerProblem EigPowerProblem::from_assignment(const SlotProblem& prob, const Assignment& a) {
  const int k_count = prob.num_uavs();
  if (a.num_uavs() != k_count || a.num_channels() != prob.num_channels()) {
    throw std::invalid_argument("eig power: assignment does not match the slot problem");
  }
  EigPowerProblem out;
  out.b.resize(k_count, k_count);
  out.noise.resize(k_count);
  out.p_max = prob.p_max_mw;
  for (int k = 0; k < k_count; ++k) {
    const int n = a.channel(k);
    for (int m = 0; m < k_count; ++m) {
      const int j = a.channel(m);
      out.b(k, m) = m == k ? prob.weights(k) * prob.gains.c(k) * prob.gains.f_inv_sq(n)
                           : prob.aci.w(n, j) * prob.gains.c(k) * prob.gains.f_inv_sq(j);
    }
    out.noise(k) = prob.ei(k, n);
  }
  return out;
}

void EigPowerProblem::validate() const {
  const Eigen::Index k = noise.size();
  if (k < 1 || b.rows() != k || b.cols() != k) throw std::invalid_argument("eig power: dimension mismatch");
  if (!b.allFinite() || (b.array() < 0.0).any()) throw std::invalid_argument("eig power: gains must be nonnegative");
  if (!(b.diagonal().array() > 0.0).all()) throw std::invalid_argument("eig power: direct gains must be positive");
  if (!noise.allFinite() || !(noise.array() > 0.0).all()) {
    throw std::invalid_argument("eig power: noise must be positive");
  }
  if (!(p_max > 0.0) || !std::isfinite(p_max)) throw std::invalid_argument("eig power: budget must be positive");
}

MatrixXd EigPowerProblem::r() const {
  MatrixXd out = b.diagonal().cwiseInverse().asDiagonal() * b;
  out.diagonal().setZero();
  return out;
}

VectorXd EigPowerProblem::h() const { return noise.cwiseQuotient(b.diagonal()); }

MatrixXd EigPowerProblem::block_matrix() const {
  const Eigen::Index k = noise.size();
  const MatrixXd rr = r();
  const VectorXd hh = h();
  MatrixXd m(k + 1, k + 1);
  m.topLeftCorner(k, k) = rr;
  m.topRightCorner(k, 1) = hh;
  m.bottomLeftCorner(1, k) = rr.colwise().sum() / p_max;
  m(k, k) = hh.sum() / p_max;
  return m;
}

namespace {

struct PerronEstimate {
  double lambda = 0.0;
  int iterations = 0;
  bool converged = false;
};

PerronEstimate power_iteration(const MatrixXd& m, const EigPowerOptions& opts) {
  PerronEstimate est;
  VectorXd z = VectorXd::Constant(m.rows(), 1.0 / static_cast<double>(m.rows()));
  for (int it = 1; it <= opts.max_power_iterations; ++it) {
    VectorXd next = m * z;
    const double lambda = next.sum();  // z sums to one
    if (!(lambda > 0.0) || !std::isfinite(lambda)) break;
    next /= lambda;
    const double change = (next - z).cwiseAbs().maxCoeff();
    const double lambda_change = std::abs(lambda - est.lambda);
    z = next;
    est.lambda = lambda;
    est.iterations = it;
    if (change <= opts.power_tol && lambda_change <= opts.power_tol * lambda) {
      est.converged = true;
      break;
    }
  }
  return est;
}

double dense_perron_root(const MatrixXd& m) {
  const Eigen::EigenSolver<MatrixXd> solver(m, false);
  if (solver.info() != Eigen::Success) throw ConvergenceError("eig power: dense eigensolver failed");
  double best = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    best = std::max(best, solver.eigenvalues()(i).real());
  }
  return best;
}

}  // namespace

EigPowerResult eig_power_alloc(const EigPowerProblem& prob, const EigPowerOptions& opts) {
  prob.validate();
  const Eigen::Index k = prob.noise.size();
  const MatrixXd rr = prob.r();
  const VectorXd hh = prob.h();
  const double budget = prob.p_max;

  EigPowerResult out;
  const PerronEstimate est = power_iteration(prob.block_matrix(), opts);
  out.iterations = est.iterations;
  double lambda = est.lambda;
  if (!est.converged) {
    lambda = dense_perron_root(prob.block_matrix());
    out.used_fallback = true;
  }

  // Collatz-Wielandt bracket from the uniform split.
  const VectorXd uniform = VectorXd::Constant(k, budget / static_cast<double>(k));
  const VectorXd ratio = (rr * uniform + hh).cwiseQuotient(uniform);
  double lo = ratio.minCoeff() * (1.0 - 1e-12);
  double hi = ratio.maxCoeff() * (1.0 + 1e-12);
  if (!(lambda > lo && lambda < hi)) lambda = 0.5 * (lo + hi);

  const MatrixXd eye = MatrixXd::Identity(k, k);
  VectorXd y;
  bool valid = false;
  for (int it = 0; it < 200; ++it) {
    const Eigen::PartialPivLU<MatrixXd> lu(lambda * eye - rr);
    y = lu.solve(hh);
    valid = y.allFinite() && (y.array() > 0.0).all();
    if (!valid) {
      lo = lambda;
      lambda = 0.5 * (lo + hi);
      continue;
    }
    const double g = y.sum() - budget;
    if (g == 0.0) break;
    if (g > 0.0) {
      lo = lambda;
    } else {
      hi = lambda;
    }
    const double slope = -lu.solve(y).sum();
    double next = lambda - g / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const bool done = std::abs(next - lambda) <= 1e-15 * lambda || hi - lo <= 1e-15 * hi;
    lambda = next;
    if (done) break;
  }
  y = Eigen::PartialPivLU<MatrixXd>(lambda * eye - rr).solve(hh);
  valid = y.allFinite() && (y.array() > 0.0).all();
  if (!valid) throw ConvergenceError("eig power: no positive equal-SINR power vector found");
  out.power = y * (budget / y.sum());
  out.delta = 1.0 / lambda;
  return out;
}

SlotSolution eig_power_fixed_assignment(const SlotProblem& prob, const Assignment& a) {
  const EigPowerResult res = eig_power_alloc(EigPowerProblem::from_assignment(prob, a));
  return evaluate_aci(prob, a, res.power, res.delta);
}

}  // namespace uavalloc
