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

#include "polybergman/diskgeom.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace polybergman {

DiskPoint::DiskPoint(Complex z) : z_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::norm(z) >= 1.0) {
    throw std::domain_error("DiskPoint: point is not inside the open unit disk");
  }
}

ExactDiskPoint::ExactDiskPoint(ComplexRational z) : z_(std::move(z)) {
  if (z_.norm() >= 1) throw std::domain_error("ExactDiskPoint: point is not inside the open unit disk");
}

SpaceOrder::SpaceOrder(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SpaceOrder: n must be >= 1, got " + std::to_string(n));
}

Complex mobius(DiskPoint z, DiskPoint w) {
  const Complex zv = z.value();
  const Complex wv = w.value();
  return (zv - wv) / (1.0 - wv * std::conj(zv));
}

PseudoDisk pseudo_disk(DiskPoint z, double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("pseudo_disk: radius must lie in (0, 1)");
  const double z2 = z.abs2();
  const double denom = 1.0 - r * r * z2;
  PseudoDisk d;
  d.center = ((1.0 - r * r) / denom) * z.value();
  d.radius = r * (1.0 - z2) / denom;
  d.inner_radius = r * (1.0 - z2) / (1.0 + r * z.abs());
  return d;
}

std::vector<Integer> kernel_series_coefficients(SpaceOrder n) {
  const auto nn = static_cast<unsigned long>(n.value());
  std::vector<Integer> c(nn);
  for (unsigned long j = 0; j < nn; ++j) {
    c[j] = binomial(nn, j + 1) * binomial(nn + j, nn);
    if (j % 2 == 1) c[j] = -c[j];
  }
  return c;
}

namespace {

std::vector<double> series_as_double(SpaceOrder n) {
  const auto exact = kernel_series_coefficients(n);
  std::vector<double> c;
  c.reserve(exact.size());
  for (const auto& v : exact) c.push_back(v.get_d());
  return c;
}

}  // namespace

Complex kernel_eval(SpaceOrder n, DiskPoint z, DiskPoint w) {
  const int order = n.value();
  const Complex one_minus = 1.0 - w.value() * std::conj(z.value());
  const double phi2 = std::norm(mobius(z, w));
  const auto c = series_as_double(n);
  double sum = 0.0;
  for (int j = order - 1; j >= 0; --j) sum = sum * phi2 + c[j];
  const double mod2 = std::norm(one_minus);
  return static_cast<double>(order) * std::pow(mod2, order - 1) * sum / std::pow(one_minus, 2 * order);
}

Complex kernel_eval_distance_form(SpaceOrder n, DiskPoint z, DiskPoint w) {
  const int order = n.value();
  const Complex one_minus = 1.0 - w.value() * std::conj(z.value());
  const double a2 = std::norm(one_minus);
  const double d2 = std::norm(w.value() - z.value());
  const auto c = series_as_double(n);
  double sum = 0.0;
  for (int j = 0; j < order; ++j) sum += c[j] * std::pow(a2, order - 1 - j) * std::pow(d2, j);
  return static_cast<double>(order) * sum / std::pow(one_minus, 2 * order);
}

ComplexRational kernel_eval_exact(SpaceOrder n, const ExactDiskPoint& z, const ExactDiskPoint& w) {
  const auto order = static_cast<unsigned>(n.value());
  const ComplexRational one_minus = ComplexRational(1) - w.value() * z.value().conj();
  const Rational a2 = one_minus.norm();
  const Rational d2 = (w.value() - z.value()).norm();
  const auto c = kernel_series_coefficients(n);
  Rational sum = 0;
  for (unsigned j = 0; j < order; ++j) {
    Rational term = Rational(c[j]);
    for (unsigned k = 0; k < order - 1 - j; ++k) term *= a2;
    for (unsigned k = 0; k < j; ++k) term *= d2;
    sum += term;
  }
  return ComplexRational(Rational(order) * sum) / pow(one_minus, 2 * order);
}

Complex normalized_kernel_eval(SpaceOrder n, DiskPoint z, DiskPoint w) {
  return (1.0 - z.abs2()) * kernel_eval(n, z, w) / static_cast<double>(n.value());
}

double kernel_norm2(SpaceOrder n, DiskPoint z) {
  const double s = 1.0 - z.abs2();
  const double nn = n.value();
  return nn * nn / (s * s);
}

}  // namespace polybergman
