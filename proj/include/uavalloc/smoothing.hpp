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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "uavalloc/channel_model.hpp"
#include "uavalloc/types.hpp"

namespace uavalloc {

template <typename Scalar>
struct SmoothedObjectiveParams {
  int tau = 2;
  Scalar mu = Scalar(1);
  /// Penalized, symmetric ACI matrix.
  MatrixX<Scalar> w_hat;

  void validate() const {
    if (tau < 1) throw std::invalid_argument("smoothing: tau >= 1 violated");
    if (!(mu > Scalar(0))) throw std::invalid_argument("smoothing: mu > 0 violated");
    if (w_hat.rows() != w_hat.cols()) throw std::invalid_argument("smoothing: W_hat must be square");
  }
};

namespace detail {

template <typename Scalar>
Scalar int_pow(Scalar x, int e) {
  Scalar r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

template <typename Scalar>
struct SurrogateTerms {
  VectorX<Scalar> t;        // A^T f
  VectorX<Scalar> q;        // squared column norms
  MatrixX<Scalar> wa;       // W_hat A
  MatrixX<Scalar> g;        // A^T W_hat A
  VectorX<Scalar> num;      // numerators
  VectorX<Scalar> den;      // denominators
  VectorX<Scalar> value;    // f_hat
};

template <typename Scalar>
SurrogateTerms<Scalar> surrogate_terms(const MatrixX<Scalar>& a, const VectorX<Scalar>& p,
                                       const GainVector<Scalar>& gains, const MatrixX<Scalar>& w_hat,
                                       const MatrixX<Scalar>& ei, const VectorX<Scalar>& weights, int tau) {
  const Eigen::Index n = a.rows();
  const Eigen::Index k_count = a.cols();
  if (gains.c.size() != k_count || gains.f_inv_sq.size() != n || p.size() != k_count ||
      weights.size() != k_count || w_hat.rows() != n || w_hat.cols() != n || ei.rows() != k_count ||
      ei.cols() != n) {
    throw std::invalid_argument("smoothing: dimension mismatch");
  }
  SurrogateTerms<Scalar> s;
  s.t = a.transpose() * gains.f_inv_sq;
  s.q = a.colwise().squaredNorm().transpose();
  s.wa = w_hat * a;
  s.g = a.transpose() * s.wa;
  const VectorX<Scalar> pt = p.cwiseProduct(s.t);
  s.num.resize(k_count);
  s.den.resize(k_count);
  for (Eigen::Index k = 0; k < k_count; ++k) {
    s.num(k) = weights(k) * p(k) * gains.c(k) * s.t(k) * int_pow(s.q(k), tau);
    const Scalar leak = s.g.row(k).dot(pt) - s.g(k, k) * pt(k);
    s.den(k) = gains.c(k) * leak + ei.row(k).dot(a.col(k));
  }
  s.value = s.num.cwiseQuotient(s.den);
  return s;
}

}  // namespace detail

/// f_hat_k: weighted SINR surrogate with the penalized ACI matrix and the
/// (a_k^T a_k)^tau factor; equals the weighted SINR under W_hat at binary A.
template <typename Scalar>
VectorX<Scalar> surrogate_sinr(const MatrixX<Scalar>& a, const VectorX<Scalar>& p, const GainVector<Scalar>& gains,
                               const SmoothedObjectiveParams<Scalar>& params, const MatrixX<Scalar>& ei,
                               const VectorX<Scalar>& weights) {
  return detail::surrogate_terms(a, p, gains, params.w_hat, ei, weights, params.tau).value;
}

/// mu log sum_k exp(-x_k / mu), shifted by the minimum for stability.
template <typename Scalar>
Scalar smooth_max_of_negated(const VectorX<Scalar>& x, Scalar mu) {
  using std::exp;
  using std::log;
  const Scalar m = x.minCoeff();
  Scalar sum(0);
  for (Eigen::Index k = 0; k < x.size(); ++k) sum += exp(-(x(k) - m) / mu);
  return -m + mu * log(sum);
}

/// Smoothed surrogate of -min_k f_hat_k, to be minimized over relaxed A.
template <typename Scalar>
Scalar smoothed_objective(const MatrixX<Scalar>& a, const VectorX<Scalar>& p, const GainVector<Scalar>& gains,
                          const SmoothedObjectiveParams<Scalar>& params, const MatrixX<Scalar>& ei,
                          const VectorX<Scalar>& weights) {
  params.validate();
  return smooth_max_of_negated(surrogate_sinr(a, p, gains, params, ei, weights), params.mu);
}

/// Analytic N x K gradient of smoothed_objective.
template <typename Scalar>
MatrixX<Scalar> grad_smoothed_objective(const MatrixX<Scalar>& a, const VectorX<Scalar>& p,
                                        const GainVector<Scalar>& gains,
                                        const SmoothedObjectiveParams<Scalar>& params, const MatrixX<Scalar>& ei,
                                        const VectorX<Scalar>& weights) {
  using std::exp;
  params.validate();
  const auto s = detail::surrogate_terms(a, p, gains, params.w_hat, ei, weights, params.tau);
  const Eigen::Index k_count = a.cols();
  const int tau = params.tau;
  const VectorX<Scalar>& f = gains.f_inv_sq;

  // Softmin weights of -F with respect to each f_hat_k.
  const Scalar m = s.value.minCoeff();
  VectorX<Scalar> w(k_count);
  for (Eigen::Index k = 0; k < k_count; ++k) w(k) = exp(-(s.value(k) - m) / params.mu);
  w /= w.sum();
  const VectorX<Scalar> u = w.cwiseQuotient(s.den);
  const VectorX<Scalar> v = u.cwiseProduct(s.value);
  const VectorX<Scalar> pt = p.cwiseProduct(s.t);
  const VectorX<Scalar> vc = v.cwiseProduct(gains.c);

  MatrixX<Scalar> grad(a.rows(), k_count);
  for (Eigen::Index k = 0; k < k_count; ++k) {
    const Scalar qk = s.q(k);
    const Scalar scale = weights(k) * p(k) * gains.c(k);
    VectorX<Scalar> col = -u(k) * scale *
                          (f * detail::int_pow(qk, tau) +
                           (Scalar(2 * tau) * s.t(k) * detail::int_pow(qk, tau - 1)) * a.col(k));

    // Own denominator.
    VectorX<Scalar> own = s.wa * pt - s.wa.col(k) * pt(k);
    col += v(k) * (gains.c(k) * own + ei.row(k).transpose());

    // Denominators of the other UAVs that see UAV k as an interferer.
    Scalar coupling_f(0);
    VectorX<Scalar> cross = VectorX<Scalar>::Zero(a.rows());
    for (Eigen::Index j = 0; j < k_count; ++j) {
      if (j == k) continue;
      cross += vc(j) * s.wa.col(j);
      coupling_f += vc(j) * s.g(j, k);
    }
    col += p(k) * (s.t(k) * cross + coupling_f * f);
    grad.col(k) = col;
  }
  return grad;
}

/// Euclidean projection onto the probability simplex (active-set method).
template <typename Scalar>
VectorX<Scalar> project_to_simplex(const VectorX<Scalar>& y) {
  const Eigen::Index n = y.size();
  if (n == 0) throw std::invalid_argument("project_to_simplex: empty vector");
  if (!y.allFinite()) throw std::invalid_argument("project_to_simplex: non-finite entry");
  std::vector<char> active(static_cast<std::size_t>(n), 1);
  Eigen::Index count = n;
  Scalar theta(0);
  while (true) {
    Scalar sum(0);
    for (Eigen::Index i = 0; i < n; ++i)
      if (active[static_cast<std::size_t>(i)]) sum += y(i);
    theta = (sum - Scalar(1)) / Scalar(count);
    bool dropped = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (active[static_cast<std::size_t>(i)] && y(i) - theta <= Scalar(0)) {
        active[static_cast<std::size_t>(i)] = 0;
        --count;
        dropped = true;
      }
    }
    if (!dropped) break;
  }
  VectorX<Scalar> x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = active[static_cast<std::size_t>(i)] ? y(i) - theta : Scalar(0);
  return x;
}

template <typename Scalar>
MatrixX<Scalar> project_columns_to_simplex(const MatrixX<Scalar>& a) {
  MatrixX<Scalar> out(a.rows(), a.cols());
  for (Eigen::Index k = 0; k < a.cols(); ++k) out.col(k) = project_to_simplex<Scalar>(a.col(k));
  return out;
}

}  // namespace uavalloc
