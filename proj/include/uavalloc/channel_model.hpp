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
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "uavalloc/assignment.hpp"
#include "uavalloc/types.hpp"

namespace uavalloc {

/// Free-space constant for frequencies in MHz and distances in km.
inline constexpr double kFreeSpaceConstantDb = 32.4;

/// 20 lg f + 20 lg d_km + 32.4 + eta, with the distance given in meters.
template <typename Scalar>
Scalar path_loss_db(Scalar f_mhz, Scalar d_m, Scalar eta_db) {
  using std::log10;
  if (!(f_mhz > Scalar(0)) || !(d_m > Scalar(0))) {
    throw std::domain_error("path_loss_db: frequency and distance must be positive");
  }
  return Scalar(20) * log10(f_mhz) + Scalar(20) * log10(d_m / Scalar(1000)) +
         Scalar(kFreeSpaceConstantDb) + eta_db;
}

/// Frequency-independent part c of the gain g = c * f^-2:
/// c = 10^(-(32.4 + eta)/10) * d_km^-2.
template <typename Scalar>
Scalar gain_coefficient(Scalar d_m, Scalar eta_db) {
  using std::pow;
  if (!(d_m > Scalar(0))) throw std::domain_error("gain_coefficient: distance must be positive");
  const Scalar d_km = d_m / Scalar(1000);
  return pow(Scalar(10), -(Scalar(kFreeSpaceConstantDb) + eta_db) / Scalar(10)) / (d_km * d_km);
}

/// Linear gain 10^(-PL/10).
template <typename Scalar>
Scalar channel_gain(Scalar f_mhz, Scalar d_m, Scalar eta_db) {
  if (!(f_mhz > Scalar(0))) throw std::domain_error("channel_gain: frequency must be positive");
  return gain_coefficient(d_m, eta_db) / (f_mhz * f_mhz);
}

template <typename Scalar>
struct GainVector {
  VectorX<Scalar> c;         // per UAV, K
  VectorX<Scalar> f_inv_sq;  // per channel, N

  int num_uavs() const { return static_cast<int>(c.size()); }
  int num_channels() const { return static_cast<int>(f_inv_sq.size()); }
};

template <typename Scalar>
VectorX<Scalar> inverse_square(const VectorX<Scalar>& freqs_mhz) {
  return freqs_mhz.array().square().inverse().matrix();
}

/// Maps a channel separation in MHz to an ACI coefficient in [0, 1].
struct AciProfile {
  enum class Kind { kExponential, kTable };

  Kind kind = Kind::kExponential;
  /// Decay length of exp(-separation / scale).
  double scale_mhz = 5.0;
  /// Piecewise-linear (separation, coefficient) points starting at (0, 1);
  /// zero beyond the last point.
  std::vector<std::pair<double, double>> table;

  static AciProfile exponential(double scale_mhz) {
    AciProfile p;
    p.scale_mhz = scale_mhz;
    return p;
  }
  static AciProfile from_table(std::vector<std::pair<double, double>> points) {
    AciProfile p;
    p.kind = Kind::kTable;
    p.table = std::move(points);
    return p;
  }

  /// Throws std::invalid_argument when the profile is not a nonincreasing map
  /// into [0, 1] with value 1 at zero separation.
  void validate() const;
  double coefficient(double separation_mhz) const;
};

template <typename Scalar>
struct AciMatrix {
  MatrixX<Scalar> w;      // physical coefficients, unit diagonal
  MatrixX<Scalar> w_hat;  // same off-diagonal, diagonal replaced by the penalty
};

/// Default co-channel penalty for a given physical W.
double default_diag_penalty(const MatrixXd& w);

template <typename Scalar>
AciMatrix<Scalar> build_aci_matrix(const VectorX<Scalar>& freqs_mhz, const AciProfile& profile,
                                   std::optional<double> w_diag_penalty = std::nullopt) {
  profile.validate();
  const Eigen::Index n = freqs_mhz.size();
  for (Eigen::Index i = 1; i < n; ++i) {
    if (!(freqs_mhz(i) > freqs_mhz(i - 1))) {
      throw std::invalid_argument("build_aci_matrix: channel grid must be strictly increasing");
    }
  }
  AciMatrix<Scalar> out;
  out.w.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.w(i, i) = Scalar(1);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      using std::abs;
      const double sep = static_cast<double>(abs(freqs_mhz(i) - freqs_mhz(j)));
      out.w(i, j) = out.w(j, i) = Scalar(profile.coefficient(sep));
    }
  }
  const double penalty =
      w_diag_penalty ? *w_diag_penalty : default_diag_penalty(out.w.template cast<double>());
  double max_off = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j) max_off = std::max(max_off, static_cast<double>(out.w(i, j)));
  if (!(penalty >= max_off) || !std::isfinite(penalty)) {
    throw std::invalid_argument("build_aci_matrix: diagonal penalty below largest ACI coefficient");
  }
  out.w_hat = out.w;
  out.w_hat.diagonal().setConstant(Scalar(penalty));
  return out;
}

namespace detail {

template <typename Scalar>
void check_sinr_inputs(int n, int k, const VectorX<Scalar>& p, const GainVector<Scalar>& g,
                       const MatrixX<Scalar>& w, const MatrixX<Scalar>& ei) {
  if (p.size() != k || g.c.size() != k || g.f_inv_sq.size() != n || w.rows() != n ||
      w.cols() != n || ei.rows() != k || ei.cols() != n) {
    throw std::invalid_argument("sinr: dimension mismatch");
  }
  if ((p.array() < Scalar(0)).any()) throw std::invalid_argument("sinr: negative power");
}

}  // namespace detail

/// Per-UAV SINR with adjacent-channel leakage, evaluated term by term.
template <typename Scalar>
VectorX<Scalar> sinr_aci(const Assignment& a, const VectorX<Scalar>& p, const GainVector<Scalar>& g,
                         const MatrixX<Scalar>& w, const MatrixX<Scalar>& ei) {
  const int k_count = a.num_uavs();
  detail::check_sinr_inputs(a.num_channels(), k_count, p, g, w, ei);
  VectorX<Scalar> out(k_count);
  for (int k = 0; k < k_count; ++k) {
    const int n = a.channel(k);
    Scalar leak(0);
    for (int m = 0; m < k_count; ++m) {
      if (m == k) continue;
      const int j = a.channel(m);
      leak += w(n, j) * p(m) * g.c(k) * g.f_inv_sq(j);
    }
    out(k) = p(k) * g.c(k) * g.f_inv_sq(n) / (leak + ei(k, n));
  }
  return out;
}

template <typename Scalar>
VectorX<Scalar> sinr_aci(const MatrixXd& a, const VectorX<Scalar>& p, const GainVector<Scalar>& g,
                         const MatrixX<Scalar>& w, const MatrixX<Scalar>& ei) {
  return sinr_aci(Assignment::from_matrix(a), p, g, w, ei);
}

/// Same quantity through the selector identities: f^T A e_k, e_k^T A^T W A e_m
/// and e_k^T Sigma A e_k. Accepts relaxed (fractional) assignments.
template <typename Scalar>
VectorX<Scalar> sinr_matrix_form(const MatrixX<Scalar>& a, const VectorX<Scalar>& p,
                                 const GainVector<Scalar>& g, const MatrixX<Scalar>& w,
                                 const MatrixX<Scalar>& ei) {
  const Eigen::Index k_count = a.cols();
  detail::check_sinr_inputs(static_cast<int>(a.rows()), static_cast<int>(k_count), p, g, w, ei);
  const VectorX<Scalar> t = a.transpose() * g.f_inv_sq;
  const MatrixX<Scalar> coupling = a.transpose() * w * a;
  const VectorX<Scalar> noise = (ei * a).diagonal();
  const VectorX<Scalar> tx = p.cwiseProduct(t);
  VectorX<Scalar> out(k_count);
  for (Eigen::Index k = 0; k < k_count; ++k) {
    const Scalar leak = g.c(k) * (coupling.row(k).dot(tx) - coupling(k, k) * tx(k));
    out(k) = tx(k) * g.c(k) / (leak + noise(k));
  }
  return out;
}

/// SINR without adjacent-channel leakage.
template <typename Scalar>
VectorX<Scalar> sinr_nullaci(const Assignment& a, const VectorX<Scalar>& p,
                             const GainVector<Scalar>& g, const MatrixX<Scalar>& ei) {
  const int k_count = a.num_uavs();
  if (p.size() != k_count || g.c.size() != k_count || ei.rows() != k_count ||
      ei.cols() != a.num_channels() || g.f_inv_sq.size() != a.num_channels()) {
    throw std::invalid_argument("sinr_nullaci: dimension mismatch");
  }
  VectorX<Scalar> out(k_count);
  for (int k = 0; k < k_count; ++k) {
    const int n = a.channel(k);
    out(k) = p(k) * g.c(k) * g.f_inv_sq(n) / ei(k, n);
  }
  return out;
}

/// Prioritized channel quality, N x K: sigma^2_{k,n} / (alpha_k c_k f_n^-2).
/// Smaller entries mark preferred (channel, UAV) pairs.
template <typename Scalar>
MatrixX<Scalar> build_pcq(const GainVector<Scalar>& g, const MatrixX<Scalar>& ei,
                          const VectorX<Scalar>& weights) {
  const Eigen::Index k_count = g.c.size();
  const Eigen::Index n_count = g.f_inv_sq.size();
  if (ei.rows() != k_count || ei.cols() != n_count || weights.size() != k_count) {
    throw std::invalid_argument("build_pcq: dimension mismatch");
  }
  if ((weights.array() <= Scalar(0)).any()) throw std::invalid_argument("build_pcq: nonpositive weight");
  if ((g.c.array() <= Scalar(0)).any() || (g.f_inv_sq.array() <= Scalar(0)).any()) {
    throw std::invalid_argument("build_pcq: nonpositive gain");
  }
  if ((ei.array() <= Scalar(0)).any()) throw std::invalid_argument("build_pcq: nonpositive interference power");
  MatrixX<Scalar> phi(n_count, k_count);
  for (Eigen::Index k = 0; k < k_count; ++k) {
    for (Eigen::Index n = 0; n < n_count; ++n) {
      phi(n, k) = ei(k, n) / (weights(k) * g.c(k) * g.f_inv_sq(n));
    }
  }
  return phi;
}

}  // namespace uavalloc
