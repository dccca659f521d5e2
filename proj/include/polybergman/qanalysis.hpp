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
#include <string>
#include <vector>

#include "polybergman/diskgeom.hpp"
#include "polybergman/rational.hpp"

namespace polybergman {

/// Polynomial in one variable with exact rational coefficients (ascending degree).
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& t) const;
  ComplexRational operator()(const ComplexRational& t) const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& a);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.c_ == b.c_; }

  /// p(1 - t).
  RationalPolynomial reflect() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// mu(t) = (sum_j (-1)^j C(n,j+1) C(n+j,n) t^j)^2, degree 2n-2.
RationalPolynomial mu_poly(SpaceOrder n);

/// b_0..b_{2n-2} with mu(t) = sum_k b_k (1-t)^k.
std::vector<Rational> b_coefficients(SpaceOrder n);

/// q_k(t) = prod_{j=1}^k (1 - t/(4j(j+1))).
RationalPolynomial q_poly(int k);

/// Q(t) = sum_k b_k/(k+1) q_k(t).
RationalPolynomial Q_poly(SpaceOrder n);

struct RootEnclosure {
  std::complex<double> approximation;
  /// Certified upper bound on the distance to a root of the polynomial. Computed from
  /// exact residuals; infinite when the approximation coincides with another one.
  double radius = 0.0;
  /// True when the enclosure disk is disjoint from all others, hence holds exactly one root.
  bool certified = false;
  /// Number of enclosure disks in this root's overlapping cluster.
  int multiplicity = 1;
  /// Upper bound on |p(lambda)| at the (rationalized) approximation.
  double residual = 0.0;
  /// Exact dyadic approximation (the rational point the bounds refer to).
  ComplexRational exact;
};

struct RootOptions {
  /// Initial working precision in bits (about 30 significant digits).
  long initial_bits = 100;
  long max_bits = 3200;
  /// Target: every certified radius below relative_radius * (1 + |lambda|).
  double relative_radius = 1e-8;
  /// Target: |p(lambda)| < relative_residual * |leading coefficient| * max(1, |lambda|)^deg.
  double relative_residual = 1e-20;
};

/// Default options; POLYBERGMAN_ROOT_BITS overrides the initial precision.
RootOptions default_root_options();

/// All complex roots with certified enclosures. Approximations come from the companion
/// matrix, are refined by simultaneous Newton (Aberth) iteration in multiprecision, and
/// are certified with Smith's Gershgorin-type bound evaluated in exact arithmetic.
/// Throws std::invalid_argument for degree < 1.
std::vector<RootEnclosure> roots_with_enclosures(const RationalPolynomial& p, const RootOptions& options = default_root_options());

/// m(lambda) = 4 Re(lambda) + Im(lambda)^2; lambda lies in Omega_inf iff m <= 0.
double omega_margin(std::complex<double> lambda);
Rational omega_margin(const ComplexRational& lambda);

/// Upper bound of |m(lambda + delta) - m(lambda)| over |delta| <= rho.
double omega_margin_slack(std::complex<double> lambda, double rho);

enum class Verdict { all_outside, inconclusive, inside_found };
std::string to_string(Verdict v);

struct QReport {
  int n = 1;
  RationalPolynomial mu;
  std::vector<Rational> b;
  RationalPolynomial Q;
  std::vector<RootEnclosure> roots;
  std::vector<double> margins;
  Verdict verdict = Verdict::all_outside;
  double min_margin = 0.0;
  int negative_real_parts = 0;
  std::string error;
};

QReport analyze_Q(SpaceOrder n, const RootOptions& options = default_root_options());

/// Reports for n_lo..n_hi in order of n; per-n failures are recorded, never thrown.
/// Values of n are processed in parallel.
std::vector<QReport> scan_Q(int n_lo, int n_hi, const RootOptions& options = default_root_options());

/// Single-threaded reference for scan_Q.
std::vector<QReport> scan_Q_serial(int n_lo, int n_hi, const RootOptions& options = default_root_options());

}  // namespace polybergman
