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

#include "polybergman/diskquad.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace polybergman {

QuadratureError::QuadratureError(std::size_t node_index, Complex node, const std::string& what)
    : std::runtime_error([&] {
        std::ostringstream os;
        os.precision(17);
        os << "integrand failed at node " << node_index << " (" << node.real() << ", " << node.imag()
           << "): " << what;
        return os.str();
      }()),
      index_(node_index),
      node_(node) {}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = z;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (z * p1 - p0) / (z * z - 1.0);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    x[lo] = -z;
    x[hi] = z;
    w[lo] = w[hi] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

DiskQuadratureRule::DiskQuadratureRule(const RadialRule& radial, int angular, double alpha)
    : radial_(static_cast<int>(radial.first.size())), angular_(angular), alpha_(alpha) {
  const auto& [t, w] = radial;
  if (radial_ < 1 || angular < 1) throw std::invalid_argument("DiskQuadratureRule: node counts must be positive");
  nodes_.reserve(t.size() * static_cast<std::size_t>(angular));
  weights_.reserve(nodes_.capacity());
  // dA = (1/pi) r dr dtheta = (1/(2 pi)) dt dtheta with t = r^2; w already integrates dt.
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double r = std::sqrt(t[i]);
    const double wt = w[i] / angular;
    for (int k = 0; k < angular; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / angular;
      nodes_.push_back(std::polar(r, theta));
      weights_.push_back(wt);
    }
  }
}

namespace {

DiskQuadratureRule::RadialRule legendre_in_t(int radial) {
  if (radial < 1) throw std::invalid_argument("DiskQuadratureRule: node counts must be positive");
  std::vector<double> x;
  std::vector<double> w;
  gauss_legendre(radial, x, w);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = 0.5 * (x[i] + 1.0);
    w[i] *= 0.5;
  }
  return {x, w};
}

// Golub-Welsch for the weight (1 - x)^a on [-1, 1], mapped to t = (x + 1)/2 on [0, 1].
DiskQuadratureRule::RadialRule jacobi_in_t(double a, int radial) {
  if (radial < 1) throw std::invalid_argument("DiskQuadratureRule: node counts must be positive");
  if (!(a > -1.0) || !std::isfinite(a)) throw std::invalid_argument("DiskQuadratureRule: jacobi exponent must exceed -1");
  const auto n = static_cast<Eigen::Index>(radial);
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index k = 0; k < n; ++k) {
    const double s = 2.0 * k + a;
    diag(k) = -a * a / (s * (s + 2.0));
    if (k == 0 && a == 0.0) diag(k) = 0.0;
  }
  for (Eigen::Index k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double s = 2.0 * kk + a;
    sub(k - 1) = std::sqrt(4.0 * kk * (kk + a) * kk * (kk + a) / (s * s * (s + 1.0) * (s - 1.0)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  std::vector<double> t(static_cast<std::size_t>(n));
  std::vector<double> w(t.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    t[static_cast<std::size_t>(i)] = 0.5 * (solver.eigenvalues()(i) + 1.0);
    // mu_0 = 2^(a+1)/(a+1); the change of variables contributes 2^-(a+1).
    w[static_cast<std::size_t>(i)] = v0 * v0 / (a + 1.0);
  }
  return {t, w};
}

}  // namespace

DiskQuadratureRule::DiskQuadratureRule(int radial, int angular)
    : DiskQuadratureRule(legendre_in_t(radial), angular, 0.0) {}

DiskQuadratureRule DiskQuadratureRule::jacobi(double alpha, int radial, int angular) {
  return DiskQuadratureRule(jacobi_in_t(alpha, radial), angular, alpha);
}

int DiskQuadratureRule::exact_degree() const { return std::min(2 * radial_ - 1, (angular_ - 1) / 2); }

DiskQuadratureRule build_rule(int radial, int angular) { return DiskQuadratureRule(radial, angular); }

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const long parsed = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || parsed < 1 || parsed > (1L << 20)) return fallback;
  return static_cast<int>(parsed);
}

}  // namespace

const DiskQuadratureRule& default_rule() {
  static const DiskQuadratureRule rule(env_int("POLYBERGMAN_QUAD_RADIAL", 64),
                                       env_int("POLYBERGMAN_QUAD_ANGULAR", 256));
  return rule;
}

DiskQuadratureRule rule_for_point(double abs_z) {
  const auto& base = default_rule();
  int radial = base.radial();
  int angular = base.angular();
  if (abs_z >= 0.99) {
    radial = std::max(radial, 256);
    angular = std::max(angular, 1024);
  }
  if (abs_z > 0.0 && abs_z < 1.0) {
    const double needed = 39.0 / -std::log(abs_z);
    while (angular < needed && angular < (1 << 16)) angular *= 2;
  }
  return DiskQuadratureRule(radial, angular);
}

Complex pairwise_sum(std::span<const Complex> v) {
  if (v.size() <= 16) {
    Complex s = 0.0;
    for (const auto& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

namespace {

Complex checked_term(const Integrand& f, const DiskQuadratureRule& rule, std::size_t i) {
  const Complex node = rule.nodes()[i];
  Complex value;
  try {
    value = f(node);
  } catch (const std::exception& e) {
    throw QuadratureError(i, node, e.what());
  }
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw QuadratureError(i, node, "non-finite integrand value");
  }
  return rule.weights()[i] * value;
}

}  // namespace

Complex integrate_serial(const Integrand& f, const DiskQuadratureRule& rule) {
  std::vector<Complex> terms(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) terms[i] = checked_term(f, rule, i);
  return pairwise_sum(terms);
}

Complex integrate(const Integrand& f, const DiskQuadratureRule& rule) {
  const auto count = static_cast<long>(rule.size());
  std::vector<Complex> terms(rule.size());
  // Exceptions cannot leave a parallel region; keep the failure at the lowest node index.
  std::optional<QuadratureError> failure;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    try {
      terms[static_cast<std::size_t>(i)] = checked_term(f, rule, static_cast<std::size_t>(i));
    } catch (const QuadratureError& e) {
#pragma omp critical(polybergman_quadrature_failure)
      if (!failure || failure->node_index() > e.node_index()) failure = e;
    }
  }
  if (failure) throw *failure;
  return pairwise_sum(terms);
}

}  // namespace polybergman
