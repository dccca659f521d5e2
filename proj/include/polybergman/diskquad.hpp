// Copyright 2026 The polybergman Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polybergman/diskgeom.hpp"

namespace polybergman {

using Integrand = std::function<Complex(Complex)>;

/// Raised when an integrand throws or returns a non-finite value at a node.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(std::size_t node_index, Complex node, const std::string& what);
  std::size_t node_index() const { return index_; }
  Complex node() const { return node_; }

 private:
  std::size_t index_;
  Complex node_;
};

/// Product rule for normalized area measure on the unit disk: Gauss-Legendre in
/// t = r^2 on [0, 1] times the uniform rule in angle.
class DiskQuadratureRule {
 public:
  /// Nodes in t and weights for dt.
  using RadialRule = std::pair<std::vector<double>, std::vector<double>>;

  DiskQuadratureRule(int radial, int angular);

  /// Gauss-Jacobi in t for the measure (1 - |w|^2)^alpha dA instead, alpha > -1.
  static DiskQuadratureRule jacobi(double alpha, int radial, int angular);

  int radial() const { return radial_; }
  int angular() const { return angular_; }
  /// Exponent of the (1 - |w|^2) factor folded into the weights; 0 for the plain rule.
  double jacobi_alpha() const { return alpha_; }
  std::span<const Complex> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }
  std::size_t size() const { return nodes_.size(); }
  /// a, b <= exact_degree() gives an exact integral for z^a conj(z)^b.
  int exact_degree() const;

 private:
  DiskQuadratureRule(const RadialRule& radial, int angular, double alpha);

  int radial_;
  int angular_;
  double alpha_ = 0.0;
  std::vector<Complex> nodes_;
  std::vector<double> weights_;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Throws std::invalid_argument on zero counts.
DiskQuadratureRule build_rule(int radial, int angular);

/// Default 64 x 256 rule; POLYBERGMAN_QUAD_RADIAL / POLYBERGMAN_QUAD_ANGULAR override it.
const DiskQuadratureRule& default_rule();

/// Rule for integrands composed with phi_z: the default rule, escalated to at least
/// 256 x 1024 for |z| >= 0.99 and to enough angular nodes that |z|^N_theta < 1e-17.
DiskQuadratureRule rule_for_point(double abs_z);

/// Sum of w_i f(node_i). Nodes are evaluated in parallel; the sum is a fixed
/// pairwise reduction so the result is bit-identical to integrate_serial.
Complex integrate(const Integrand& f, const DiskQuadratureRule& rule);

/// Single-threaded reference implementation of integrate.
Complex integrate_serial(const Integrand& f, const DiskQuadratureRule& rule);

/// Deterministic pairwise sum.
Complex pairwise_sum(std::span<const Complex> values);

}  // namespace polybergman
