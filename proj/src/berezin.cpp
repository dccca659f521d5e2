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

#include "polybergman/berezin.hpp"

#include <cmath>
#include <stdexcept>

#include "polybergman/qanalysis.hpp"

namespace polybergman {

BerezinWeight::BerezinWeight(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("BerezinWeight: alpha must be >= 0");
}

std::vector<double> mu_coefficients_double(SpaceOrder n) {
  const auto mu = mu_poly(n);
  std::vector<double> c;
  c.reserve(mu.coefficients().size());
  for (const auto& q : mu.coefficients()) c.push_back(q.get_d());
  return c;
}

namespace {

double horner(const std::vector<double>& c, double t) {
  double s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * t + *it;
  return s;
}

}  // namespace

Complex weighted_berezin(BerezinWeight alpha, const Integrand& u, DiskPoint z, const DiskQuadratureRule& rule) {
  const Complex zv = z.value();
  const double a = alpha.alpha();
  if (a != std::floor(a)) {
    // (1 - t)^a is not smooth at t = 1; fold it into a Gauss-Jacobi radial rule.
    const auto jacobi = DiskQuadratureRule::jacobi(a, rule.radial(), rule.angular());
    const Integrand plain = [&](Complex w) { return u((zv - w) / (1.0 - w * std::conj(zv))); };
    return (a + 1.0) * integrate(plain, jacobi);
  }
  const Integrand integrand = [&](Complex w) {
    const Complex phi = (zv - w) / (1.0 - w * std::conj(zv));
    const double weight = a == 0.0 ? 1.0 : std::pow(1.0 - std::norm(w), a);
    return u(phi) * weight;
  };
  return (a + 1.0) * integrate(integrand, rule);
}

Complex symbol_berezin(SpaceOrder n, const Integrand& f, DiskPoint z, const DiskQuadratureRule& rule) {
  const Complex zv = z.value();
  const auto mu = mu_coefficients_double(n);
  const Integrand integrand = [&](Complex w) {
    const Complex phi = (zv - w) / (1.0 - w * std::conj(zv));
    return f(phi) * horner(mu, std::norm(w));
  };
  return integrate(integrand, rule);
}

Complex operator_kernel_form(const OperatorMatrix& t, DiskPoint z, DiskPoint w) {
  const auto cz = t.basis().kernel_coefficients(z);
  const auto cw = t.basis().kernel_coefficients(w);
  const auto m = static_cast<Eigen::Index>(cz.size());
  const Eigen::Map<const Eigen::VectorXcd> vz(cz.data(), m);
  const Eigen::Map<const Eigen::VectorXcd> vw(cw.data(), m);
  return vw.dot(t.values() * vz);  // dot() conjugates its left operand
}

OperatorBerezinValue operator_berezin(const OperatorMatrix& t, SpaceOrder n, DiskPoint z) {
  if (!(t.order() == n)) throw std::invalid_argument("operator_berezin: matrix basis has a different order n");
  const auto c = t.basis().kernel_coefficients(z);
  const auto m = static_cast<Eigen::Index>(c.size());
  const Eigen::Map<const Eigen::VectorXcd> v(c.data(), m);
  const Complex form = v.dot(t.values() * v);
  const double truncated = v.squaredNorm();
  const double full = kernel_norm2(n, z);
  return {form / truncated, truncated / full, form / full};
}

Complex invariant_laplacian(const Integrand& g, DiskPoint z, double h) {
  const double limit = (1.0 - z.abs()) / 4.0;
  if (!(h > 0.0 && h < limit)) throw std::invalid_argument("invariant_laplacian: step too large for the boundary distance");
  const Complex zv = z.value();
  const Complex center = g(zv);
  auto five_point = [&](double s) {
    const Complex sum = g(zv + s) + g(zv - s) + g(zv + Complex(0.0, s)) + g(zv - Complex(0.0, s));
    return (sum - 4.0 * center) / (s * s);
  };
  const Complex coarse = five_point(h);
  const Complex fine = five_point(h / 2.0);
  const Complex laplacian = (4.0 * fine - coarse) / 3.0;
  const double s = 1.0 - z.abs2();
  return s * s * laplacian;
}

DecompositionResidual berezin_decomposition_residual(SpaceOrder n, const Integrand& f, DiskPoint z,
                                                     const DiskQuadratureRule& rule, double alpha, double step) {
  DecompositionResidual r{};

  const Complex direct = symbol_berezin(n, f, z, rule);
  const auto b = b_coefficients(n);
  Complex combination = 0.0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (sgn(b[k]) == 0) continue;
    const double coeff = b[k].get_d() / static_cast<double>(k + 1);
    combination += coeff * weighted_berezin(BerezinWeight(static_cast<double>(k)), f, z, rule);
  }
  r.combination = std::abs(direct - combination);

  const BerezinWeight a(alpha);
  const BerezinWeight a1(alpha + 1.0);
  const Integrand transformed = [&](Complex x) { return weighted_berezin(a, f, DiskPoint(x), rule); };
  const Complex lhs = invariant_laplacian(transformed, z, step);
  const Complex rhs = 4.0 * (alpha + 1.0) * (alpha + 2.0) *
                      (weighted_berezin(a, f, z, rule) - weighted_berezin(a1, f, z, rule));
  r.recursion = std::abs(lhs - rhs);
  return r;
}

}  // namespace polybergman
