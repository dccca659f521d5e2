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

#include "polybergman/qanalysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polybergman {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

void RationalPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& t) const {
  Rational s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * t + *it;
  return s;
}

ComplexRational RationalPolynomial::operator()(const ComplexRational& t) const {
  ComplexRational s;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * t + ComplexRational{*it, 0};
  return s;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const Rational& s, const RationalPolynomial& a) {
  std::vector<Rational> c = a.c_;
  for (auto& x : c) x *= s;
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::reflect() const {
  if (c_.empty()) return {};
  // Clear denominators, shift p(x) -> p(1 + x) by repeated synthetic division (additions
  // only), then substitute x = -t.
  Integer lcm = 1;
  for (const auto& q : c_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> a(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) a[k] = c_[k].get_num() * (lcm / c_[k].get_den());
  const std::size_t d = a.size() - 1;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = d; j-- > i;) a[j] += a[j + 1];
  }
  std::vector<Rational> out(a.size());
  for (std::size_t k = 0; k <= d; ++k) {
    out[k] = Rational(k % 2 == 0 ? a[k] : Integer(-a[k]), lcm);
    out[k].canonicalize();
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial mu_poly(SpaceOrder n) {
  const int m = n.value();
  std::vector<Rational> c;
  for (int j = 0; j < m; ++j) {
    Rational cj(binomial(m, j + 1) * binomial(m + j, m));
    if (j % 2 == 1) cj = -cj;
    c.push_back(cj);
  }
  const RationalPolynomial base(std::move(c));
  return base * base;
}

std::vector<Rational> b_coefficients(SpaceOrder n) {
  const auto reflected = mu_poly(n).reflect();
  std::vector<Rational> b(static_cast<std::size_t>(2 * n.value() - 1));
  for (std::size_t k = 0; k < b.size(); ++k) b[k] = reflected.coefficient(k);
  return b;
}

RationalPolynomial q_poly(int k) {
  if (k < 0) throw std::invalid_argument("q_poly: k must be >= 0");
  RationalPolynomial q({Rational(1)});
  for (int j = 1; j <= k; ++j) {
    Rational step(1, 4 * j * (j + 1));
    step.canonicalize();
    q = q * RationalPolynomial({Rational(1), -step});
  }
  return q;
}

RationalPolynomial Q_poly(SpaceOrder n) {
  // Nested form: Q = w_0 + f_1 (w_1 + f_2 (w_2 + ...)), w_k = b_k/(k+1), f_j = 1 - t/(4j(j+1)).
  const auto b = b_coefficients(n);
  RationalPolynomial q;
  for (std::size_t k = b.size(); k-- > 0;) {
    if (k + 1 < b.size()) {
      const long j = static_cast<long>(k + 1);
      Rational step(1, static_cast<unsigned long>(4 * j * (j + 1)));
      q = q * RationalPolynomial({Rational(1), -step});
    }
    Rational w = b[k] / Rational(static_cast<long>(k + 1));
    q = q + RationalPolynomial({w});
  }
  return q;
}

double omega_margin(std::complex<double> lambda) { return 4.0 * lambda.real() + lambda.imag() * lambda.imag(); }

Rational omega_margin(const ComplexRational& lambda) { return 4 * lambda.re + lambda.im * lambda.im; }

double omega_margin_slack(std::complex<double> lambda, double rho) {
  if (!std::isfinite(rho)) return std::numeric_limits<double>::infinity();
  // |4 dx + 2 y dy + dy^2| <= 4 rho + 2|y| rho + rho^2, with a little room for rounding.
  const double s = 4.0 * rho + 2.0 * std::abs(lambda.imag()) * rho + rho * rho;
  return s * (1.0 + 1e-12) + std::numeric_limits<double>::denorm_min();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::all_outside: return "all_outside";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::inside_found: return "inside_found";
  }
  return "unknown";
}

QReport analyze_Q(SpaceOrder n, const RootOptions& options) {
  QReport r;
  r.n = n.value();
  r.mu = mu_poly(n);
  r.b = b_coefficients(n);
  r.Q = Q_poly(n);
  if (r.Q.degree() < 1) {
    r.verdict = Verdict::all_outside;
    r.min_margin = std::numeric_limits<double>::infinity();
    return r;
  }
  r.roots = roots_with_enclosures(r.Q, options);
  bool all_certified_outside = true;
  bool inside = false;
  r.min_margin = std::numeric_limits<double>::infinity();
  for (const auto& root : r.roots) {
    const double m = omega_margin(root.exact).get_d();
    const double slack = omega_margin_slack(root.approximation, root.radius);
    r.margins.push_back(m);
    r.min_margin = std::min(r.min_margin, m);
    if (root.exact.re < 0) ++r.negative_real_parts;
    if (!root.certified || !(m - slack > 0.0)) all_certified_outside = false;
    if (root.certified && m + slack <= 0.0) inside = true;
  }
  if (inside) {
    r.verdict = Verdict::inside_found;
  } else if (all_certified_outside) {
    r.verdict = Verdict::all_outside;
  } else {
    r.verdict = Verdict::inconclusive;
  }
  return r;
}

namespace {

QReport guarded(int n, const RootOptions& options) {
  try {
    return analyze_Q(SpaceOrder(n), options);
  } catch (const std::exception& ex) {
    QReport r;
    r.n = n;
    r.verdict = Verdict::inconclusive;
    r.error = ex.what();
    return r;
  }
}

void check_range(int lo, int hi) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("scan_Q: need 1 <= n_lo <= n_hi");
}

}  // namespace

std::vector<QReport> scan_Q_serial(int n_lo, int n_hi, const RootOptions& options) {
  check_range(n_lo, n_hi);
  std::vector<QReport> out;
  for (int n = n_lo; n <= n_hi; ++n) out.push_back(guarded(n, options));
  return out;
}

std::vector<QReport> scan_Q(int n_lo, int n_hi, const RootOptions& options) {
  check_range(n_lo, n_hi);
  std::vector<QReport> out(static_cast<std::size_t>(n_hi - n_lo + 1));
  const auto count = static_cast<long>(out.size());
  // Largest n first: cost grows steeply with n.
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = count - 1; k >= 0; --k) out[static_cast<std::size_t>(k)] = guarded(n_lo + static_cast<int>(k), options);
  return out;
}

}  // namespace polybergman
