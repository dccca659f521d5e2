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

#include <complex>
#include <vector>

#include "polybergman/rational.hpp"

namespace polybergman {

using Complex = std::complex<double>;

/// A point of the open unit disk. Construction with |z| >= 1 throws std::domain_error.
class DiskPoint {
 public:
  explicit DiskPoint(Complex z);
  DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

  Complex value() const { return z_; }
  double re() const { return z_.real(); }
  double im() const { return z_.imag(); }
  double abs() const { return std::abs(z_); }
  double abs2() const { return std::norm(z_); }

 private:
  Complex z_;
};

/// Exact interior point with rational coordinates.
class ExactDiskPoint {
 public:
  explicit ExactDiskPoint(ComplexRational z);

  const ComplexRational& value() const { return z_; }
  DiskPoint to_float() const { return DiskPoint(z_.to_complex()); }

 private:
  ComplexRational z_;
};

/// Polyanalytic order n >= 1.
class SpaceOrder {
 public:
  explicit SpaceOrder(int n);
  int value() const { return n_; }
  friend bool operator==(SpaceOrder a, SpaceOrder b) { return a.n_ == b.n_; }

 private:
  int n_;
};

/// Euclidean description of a pseudo-hyperbolic disk E(z, r).
struct PseudoDisk {
  Complex center;
  double radius;
  /// Radius of the Euclidean disk about z that E(z, r) contains.
  double inner_radius;
};

/// The disk automorphism (z - w) / (1 - w conj(z)) exchanging 0 and z.
Complex mobius(DiskPoint z, DiskPoint w);

/// Throws std::invalid_argument unless 0 < r < 1.
PseudoDisk pseudo_disk(DiskPoint z, double r);

/// Coefficients (-1)^j C(n, j+1) C(n+j, n), j = 0..n-1, of the radial factor of the kernel.
std::vector<Integer> kernel_series_coefficients(SpaceOrder n);

/// Reproducing kernel K_z(w) of A^2_n, evaluated through |phi_z(w)|.
Complex kernel_eval(SpaceOrder n, DiskPoint z, DiskPoint w);

/// Same kernel through the |1 - w conj(z)|, |w - z| form.
Complex kernel_eval_distance_form(SpaceOrder n, DiskPoint z, DiskPoint w);

/// K_z(w) in exact rational arithmetic (the distance form is rational in z, w).
ComplexRational kernel_eval_exact(SpaceOrder n, const ExactDiskPoint& z, const ExactDiskPoint& w);

/// k_z(w) = (1 - |z|^2) K_z(w) / n.
Complex normalized_kernel_eval(SpaceOrder n, DiskPoint z, DiskPoint w);

/// ||K_z||^2 = n^2 / (1 - |z|^2)^2.
double kernel_norm2(SpaceOrder n, DiskPoint z);

}  // namespace polybergman
