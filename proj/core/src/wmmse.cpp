// SPDX-License-Identifier: Apache-2.0
//
// fogran-sim: user pre-scheduling and beamforming for cloud/fog radio access networks
// Copyright (C) 2026 The fogran-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "wmmse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fogran::detail {

namespace {

double power_at(const Eigen::VectorXd& eigenvalues, const Eigen::MatrixXd& projected_sq,
                const Eigen::VectorXd& column_shift, double nu) {
  double total = 0.0;
  for (Eigen::Index j = 0; j < projected_sq.cols(); ++j) {
    for (Eigen::Index i = 0; i < projected_sq.rows(); ++i) {
      const double q = projected_sq(i, j);
      if (q == 0.0) continue;
      const double d = eigenvalues(i) + column_shift(j) + nu;
      if (d <= 0.0) return std::numeric_limits<double>::infinity();
      total += q / (d * d);
    }
  }
  return total;
}

}  // namespace

double power_multiplier(const Eigen::VectorXd& eigenvalues, const Eigen::MatrixXd& projected_sq,
                        const Eigen::VectorXd& column_shift, double budget) {
  if (power_at(eigenvalues, projected_sq, column_shift, 0.0) <= budget) return 0.0;
  // p(nu) <= sum|q|^2 / nu^2 because every denominator is at least nu.
  double hi = std::sqrt(projected_sq.sum() / budget);
  double lo = 0.0;
  while (power_at(eigenvalues, projected_sq, column_shift, hi) > budget) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (power_at(eigenvalues, projected_sq, column_shift, mid) > budget) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

WmmseEngine::WmmseEngine(const Eigen::MatrixXcd& channel, AntennaLayout layout, double noise_power,
                         std::vector<double> max_power)
    : h_(channel), layout_(std::move(layout)), noise_(noise_power), max_power_(std::move(max_power)) {
  if (h_.rows() != layout_.total_antennas() || h_.cols() != layout_.user_count())
    throw std::invalid_argument("wmmse: channel shape does not match layout");
  if (max_power_.size() != static_cast<std::size_t>(layout_.ap_count()))
    throw std::invalid_argument("wmmse: one power budget per AP required");
  if (!(noise_ > 0.0)) throw std::invalid_argument("wmmse: noise power must be positive");
}

std::vector<double> WmmseEngine::sinrs(const Eigen::MatrixXcd& w) const {
  const Eigen::MatrixXcd g = h_.adjoint() * w;
  std::vector<double> out(static_cast<std::size_t>(g.rows()));
  for (Eigen::Index k = 0; k < g.rows(); ++k) {
    double interference = 0.0;
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (j != k) interference += std::norm(g(k, j));
    }
    out[static_cast<std::size_t>(k)] = std::norm(g(k, k)) / (interference + noise_);
  }
  return out;
}

double WmmseEngine::objective(const Eigen::MatrixXcd& w, const std::vector<double>& weights,
                              const Eigen::MatrixXd& penalties) const {
  const std::vector<double> gamma = sinrs(w);
  double value = 0.0;
  for (std::size_t k = 0; k < gamma.size(); ++k) value += weights[k] * std::log1p(gamma[k]);
  for (int r = 0; r < layout_.ap_count(); ++r) {
    for (int k = 0; k < layout_.user_count(); ++k) {
      const double mu = penalties(r, k);
      if (mu != 0.0) value -= mu * w.col(k).segment(layout_.offset(r), layout_.antennas(r)).squaredNorm();
    }
  }
  return value;
}

Eigen::MatrixXcd WmmseEngine::matched_initialization() const {
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(h_.rows(), h_.cols());
  const double users = static_cast<double>(layout_.user_count());
  for (int r = 0; r < layout_.ap_count(); ++r) {
    const double amplitude = std::sqrt(max_power_[static_cast<std::size_t>(r)] / users);
    for (int k = 0; k < layout_.user_count(); ++k) {
      const auto h = h_.col(k).segment(layout_.offset(r), layout_.antennas(r));
      const double n = h.norm();
      if (n > 0.0) w.col(k).segment(layout_.offset(r), layout_.antennas(r)) = (amplitude / n) * h;
    }
  }
  return w;
}

void WmmseEngine::transmit_update(Eigen::MatrixXcd& w, const std::vector<double>& weights,
                                  const Eigen::MatrixXd& penalties) const {
  const Eigen::Index users = h_.cols();
  const Eigen::MatrixXcd g = h_.adjoint() * w;  // (k, j) = h_k^H w_j

  // Receive scalars and MSE weights.
  Eigen::VectorXd rx_weight(users);  // omega_k |u_k|^2
  Eigen::VectorXcd tx_coeff(users);  // omega_k u_k
  for (Eigen::Index k = 0; k < users; ++k) {
    const double a = weights[static_cast<std::size_t>(k)];
    const double total = g.row(k).squaredNorm() + noise_;
    const std::complex<double> u = g(k, k) / total;
    const double mse = 1.0 - std::norm(g(k, k)) / total;
    const double omega = a > 0.0 ? a / std::max(mse, std::numeric_limits<double>::min()) : 0.0;
    rx_weight(k) = omega * std::norm(u);
    tx_coeff(k) = omega * u;
  }

  // A = sum_k omega_k |u_k|^2 h_k h_k^H,  c_j = omega_j u_j h_j.
  const Eigen::MatrixXcd scaled = h_ * rx_weight.cwiseSqrt().asDiagonal();
  const Eigen::MatrixXcd a_mat = scaled * scaled.adjoint();
  const Eigen::MatrixXcd c_mat = h_ * tx_coeff.asDiagonal();
  Eigen::MatrixXcd aw = a_mat * w;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig;
  for (int r = 0; r < layout_.ap_count(); ++r) {
    const Eigen::Index o = layout_.offset(r);
    const Eigen::Index m = layout_.antennas(r);
    const Eigen::MatrixXcd a_rr = a_mat.block(o, o, m, m);
    const Eigen::MatrixXcd w_old = w.middleRows(o, m);
    // Linear term with the other APs' blocks folded in.
    const Eigen::MatrixXcd d = c_mat.middleRows(o, m) - aw.middleRows(o, m) + a_rr * w_old;

    eig.compute(a_rr);
    const Eigen::VectorXd lambda = eig.eigenvalues().cwiseMax(0.0);
    const Eigen::MatrixXcd q = eig.eigenvectors().adjoint() * d;
    const Eigen::MatrixXd q_sq = q.cwiseAbs2();
    const Eigen::VectorXd shift = penalties.row(r).transpose();

    const double nu = power_multiplier(lambda, q_sq, shift, max_power_[static_cast<std::size_t>(r)]);

    Eigen::MatrixXcd scaled_q(m, users);
    for (Eigen::Index j = 0; j < users; ++j) {
      for (Eigen::Index i = 0; i < m; ++i) {
        const double den = lambda(i) + shift(j) + nu;
        scaled_q(i, j) = (q_sq(i, j) == 0.0 || den <= 0.0) ? std::complex<double>(0.0) : q(i, j) / den;
      }
    }
    const Eigen::MatrixXcd w_new = eig.eigenvectors() * scaled_q;
    w.middleRows(o, m) = w_new;
    aw.noalias() += a_mat.middleCols(o, m) * (w_new - w_old);
  }
}

InnerLoopResult WmmseEngine::run(Eigen::MatrixXcd& w, const std::vector<double>& weights,
                                 const Eigen::MatrixXd& penalties, int max_iterations, double tolerance) const {
  if (weights.size() != static_cast<std::size_t>(layout_.user_count()))
    throw std::invalid_argument("wmmse: one weight per user required");
  if (penalties.rows() != layout_.ap_count() || penalties.cols() != layout_.user_count())
    throw std::invalid_argument("wmmse: penalty matrix shape mismatch");

  InnerLoopResult result;
  double previous = objective(w, weights, penalties);
  result.trace.push_back(previous);
  for (int it = 0; it < max_iterations; ++it) {
    transmit_update(w, weights, penalties);
    const double current = objective(w, weights, penalties);
    result.trace.push_back(current);
    ++result.iterations;
    if (std::abs(current - previous) <= tolerance * std::max(std::abs(current), 1e-300)) {
      result.converged = true;
      break;
    }
    previous = current;
  }
  return result;
}

}  // namespace fogran::detail
