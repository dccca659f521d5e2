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

#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "polybergman/qanalysis.hpp"

using namespace polybergman;

namespace {
RationalPolynomial poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RationalPolynomial(v);
}
}  // namespace

TEST_CASE("mu polynomials") {
  CHECK(mu_poly(SpaceOrder(1)) == poly({1}));
  CHECK(mu_poly(SpaceOrder(2)) == poly({4, -12, 9}));
  CHECK(mu_poly(SpaceOrder(3)) == poly({9, -72, 204, -240, 100}));
}

TEST_CASE("b coefficients") {
  CHECK(b_coefficients(SpaceOrder(1)) == std::vector<Rational>{1});
  CHECK(b_coefficients(SpaceOrder(2)) == std::vector<Rational>{1, -6, 9});
  CHECK(b_coefficients(SpaceOrder(3)) == std::vector<Rational>{1, -16, 84, -160, 100});
}

TEST_CASE("q_k products") {
  CHECK(q_poly(0) == poly({1}));
  CHECK(q_poly(1) == RationalPolynomial({Rational(1), Rational(-1, 8)}));
  CHECK(q_poly(2) == RationalPolynomial({Rational(1), Rational(-1, 6), Rational(1, 192)}));
  CHECK_THROWS_AS(q_poly(-1), std::invalid_argument);
}

TEST_CASE("Q polynomials") {
  CHECK(Q_poly(SpaceOrder(1)) == poly({1}));
  CHECK(Q_poly(SpaceOrder(2)) == RationalPolynomial({Rational(1), Rational(-1, 8), Rational(1, 64)}));
  // Nested evaluation matches the defining sum.
  for (int n : {3, 7}) {
    const auto b = b_coefficients(SpaceOrder(n));
    RationalPolynomial direct;
    for (std::size_t k = 0; k < b.size(); ++k) direct = direct + (b[k] / Rational(static_cast<long>(k + 1))) * q_poly(static_cast<int>(k));
    CHECK(Q_poly(SpaceOrder(n)) == direct);
  }
}

TEST_CASE("reflection") {
  const auto p = RationalPolynomial({Rational(1, 3), Rational(2), Rational(-5, 7), Rational(4)});
  CHECK(p.reflect().reflect() == p);
  CHECK(p.reflect()(Rational(1, 5)) == p(Rational(4, 5)));
  CHECK(RationalPolynomial().reflect() == RationalPolynomial());
}

TEST_CASE("root enclosures") {
  const auto r = roots_with_enclosures(poly({-1, 0, 1}));
  REQUIRE(r.size() == 2);
  for (const auto& root : r) {
    CHECK(root.certified);
    CHECK(root.multiplicity == 1);
    CHECK(std::abs(std::abs(root.approximation.real()) - 1.0) < root.radius + 1e-30);
  }
  const auto d = roots_with_enclosures(poly({1, -2, 1}));
  REQUIRE(d.size() == 2);
  CHECK_FALSE(d[0].certified);
  CHECK(d[0].multiplicity == 2);
  CHECK(std::abs(d[0].approximation - 1.0) < 1e-6);

  const auto z = roots_with_enclosures(poly({0, 0, 1, 1}));
  REQUIRE(z.size() == 3);
  CHECK(z[0].multiplicity == 2);
  CHECK_FALSE(z[0].certified);
  CHECK(z[2].certified);
  CHECK(std::abs(z[2].approximation + 1.0) < 1e-20);

  CHECK_THROWS_AS(roots_with_enclosures(poly({3})), std::invalid_argument);
}

TEST_CASE("roots of a Wilkinson-like polynomial") {
  RationalPolynomial p = poly({1});
  for (long k = 1; k <= 12; ++k) p = p * poly({-k, 1});
  const auto r = roots_with_enclosures(p);
  REQUIRE(r.size() == 12);
  std::vector<double> re;
  for (const auto& root : r) {
    CHECK(root.certified);
    re.push_back(root.approximation.real());
  }
  std::sort(re.begin(), re.end());
  for (int k = 0; k < 12; ++k) CHECK(std::abs(re[k] - (k + 1)) < 1e-12);
}

TEST_CASE("omega margins") {
  CHECK(omega_margin(Complex(0.0)) == 0.0);
  CHECK(omega_margin(Complex(-1.0)) == -4.0);
  CHECK(omega_margin(Complex(4.0, 4.0 * std::sqrt(3.0))) == doctest::Approx(64.0));
  CHECK(omega_margin(ComplexRational(Rational(4), Rational(3))) == 25);
  CHECK(omega_margin_slack(Complex(1.0, 2.0), 0.0) >= 0.0);
  CHECK(omega_margin_slack(Complex(1.0, 2.0), std::numeric_limits<double>::infinity()) == std::numeric_limits<double>::infinity());
  // The slack bounds the worst perturbation.
  const Complex lambda(2.0, -3.0);
  const double rho = 0.1;
  for (int k = 0; k < 16; ++k) {
    const Complex moved = lambda + std::polar(rho, k * 0.39269908169872414);
    CHECK(std::abs(omega_margin(moved) - omega_margin(lambda)) <= omega_margin_slack(lambda, rho));
  }
}

TEST_CASE("n = 2 report") {
  const auto r = analyze_Q(SpaceOrder(2));
  CHECK(r.verdict == Verdict::all_outside);
  REQUIRE(r.roots.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(r.roots[i].certified);
    CHECK(r.roots[i].radius < 1e-10);
    CHECK(std::abs(r.roots[i].approximation.real() - 4.0) < 1e-12);
    CHECK(std::abs(std::abs(r.roots[i].approximation.imag()) - 4.0 * std::sqrt(3.0)) < 1e-12);
    CHECK(std::abs(r.margins[i] - 64.0) < 1e-8);
  }
  CHECK(r.min_margin == doctest::Approx(64.0));
  CHECK(r.negative_real_parts == 0);
}

TEST_CASE("scans") {
  const auto one = scan_Q(1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].verdict == Verdict::all_outside);
  CHECK(one[0].roots.empty());
  CHECK(one[0].Q.degree() == 0);

  const auto s = scan_Q(2, 10);
  REQUIRE(s.size() == 9);
  for (std::size_t k = 0; k < s.size(); ++k) {
    CHECK(s[k].n == static_cast<int>(k) + 2);
    CHECK(s[k].verdict == Verdict::all_outside);
    CHECK(s[k].roots.size() == 2 * k + 2);
  }
  const auto serial = scan_Q_serial(2, 10);
  for (std::size_t k = 0; k < s.size(); ++k) CHECK(s[k].min_margin == serial[k].min_margin);
  CHECK_THROWS_AS(scan_Q(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(scan_Q(5, 3), std::invalid_argument);
}

TEST_CASE("to_string of verdicts") {
  CHECK(to_string(Verdict::all_outside) == "all_outside");
  CHECK(to_string(Verdict::inconclusive) == "inconclusive");
  CHECK(to_string(Verdict::inside_found) == "inside_found");
}
