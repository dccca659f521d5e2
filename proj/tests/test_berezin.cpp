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
#include <stdexcept>

#include "doctest.h"
#include "polybergman/berezin.hpp"
#include "polybergman/toeplitz.hpp"

using namespace polybergman;

namespace {
const Integrand kOne = [](Complex) { return Complex(1.0); };
const Integrand kAbs2 = [](Complex w) { return Complex(std::norm(w)); };
const Integrand kRe = [](Complex w) { return Complex(w.real()); };
}  // namespace

TEST_CASE("weighted Berezin anchors") {
  const auto& rule = default_rule();
  const DiskPoint origin(0.0, 0.0);
  CHECK(std::abs(weighted_berezin(BerezinWeight(0), kAbs2, origin, rule) - 0.5) < 1e-10);
  CHECK(std::abs(weighted_berezin(BerezinWeight(1), kAbs2, origin, rule) - 1.0 / 3.0) < 1e-10);
  for (double a : {0.0, 0.5, 2.0}) {
    CHECK(std::abs(weighted_berezin(BerezinWeight(a), kRe, DiskPoint(0.6, -0.3), rule_for_point(0.68)) - 0.6) < 1e-8);
  }
  CHECK_THROWS_AS(BerezinWeight(-0.5), std::invalid_argument);
}

TEST_CASE("polyanalytic Berezin anchors") {
  const auto& rule = default_rule();
  for (int n : {1, 2, 3, 5}) {
    CHECK(std::abs(symbol_berezin(SpaceOrder(n), kOne, DiskPoint(0.4, 0.4), rule) - 1.0) < 1e-12);
  }
  CHECK(std::abs(symbol_berezin(SpaceOrder(2), kRe, DiskPoint(0.3, 0.0), rule) - 0.3) < 1e-8);
  CHECK(std::abs(symbol_berezin(SpaceOrder(2), kAbs2, DiskPoint(0.0, 0.0), rule) - 0.25) < 1e-10);
  // n = 1 is the unweighted transform.
  const DiskPoint z(0.2, 0.5);
  CHECK(std::abs(symbol_berezin(SpaceOrder(1), kAbs2, z, rule) - weighted_berezin(BerezinWeight(0), kAbs2, z, rule)) < 1e-14);
}

TEST_CASE("mu coefficients in floating point") {
  const auto mu2 = mu_coefficients_double(SpaceOrder(2));
  REQUIRE(mu2.size() == 3);
  CHECK(mu2[0] == 4.0);
  CHECK(mu2[1] == -12.0);
  CHECK(mu2[2] == 9.0);
}

TEST_CASE("operator Berezin transform") {
  const DiskPoint origin(0.0, 0.0);
  const auto basis = make_basis(SpaceOrder(2), 10);
  const auto id = operator_berezin(OperatorMatrix::identity(basis), SpaceOrder(2), DiskPoint(0.7, 0.1));
  CHECK(std::abs(id.value - 1.0) < 1e-14);
  const auto r = operator_berezin(rank_one_matrix(Polynomial(1), Polynomial(1), basis), SpaceOrder(2), origin);
  CHECK(std::abs(r.value - 0.25) < 1e-14);
  CHECK(std::abs(r.mass_corrected - 0.25) < 1e-14);
  const auto t = operator_berezin(toeplitz_matrix(basis, Polynomial::monomial(1, 1)), SpaceOrder(2), origin);
  CHECK(std::abs(t.value - 0.25) < 1e-6);
  CHECK(t.mass == doctest::Approx(1.0));
  CHECK_THROWS_AS(operator_berezin(OperatorMatrix::identity(basis), SpaceOrder(3), origin), std::invalid_argument);

  // B(1 (x) 1)(z) tends to (1 - |z|^2)^2 / n^2 once the kernel is resolved.
  const DiskPoint z(0.4, 0.0);
  const auto wide = make_basis(SpaceOrder(2), kernel_cap_for(SpaceOrder(2), 0.4, 1e-14));
  const auto rz = operator_berezin(rank_one_matrix(Polynomial(1), Polynomial(1), wide), SpaceOrder(2), z);
  CHECK(std::abs(rz.mass_corrected - std::pow(1.0 - 0.16, 2) / 4.0) < 1e-12);
}

TEST_CASE("invariant Laplacian") {
  const DiskPoint origin(0.0, 0.0);
  CHECK(std::abs(invariant_laplacian(kRe, DiskPoint(0.3, 0.2), 1e-2)) < 1e-9);
  CHECK(std::abs(invariant_laplacian(kAbs2, origin, 1e-2) - 4.0) < 1e-8);
  CHECK(std::abs(invariant_laplacian(kAbs2, DiskPoint(0.5, 0.0), 1e-2) - 2.25) < 1e-8);
  CHECK_THROWS_AS(invariant_laplacian(kAbs2, DiskPoint(0.9, 0.0), 0.05), std::invalid_argument);
  CHECK_THROWS_AS(invariant_laplacian(kAbs2, origin, 0.0), std::invalid_argument);
}

TEST_CASE("decomposition and recursion residuals") {
  const auto& rule = default_rule();
  const DiskPoint origin(0.0, 0.0);
  CHECK(berezin_decomposition_residual(SpaceOrder(2), kAbs2, origin, rule).combination < 1e-10);
  const Integrand f = [](Complex w) { return w * w * std::conj(w) + std::exp(w); };
  CHECK(berezin_decomposition_residual(SpaceOrder(1), f, DiskPoint(0.3, 0.6), rule).combination < 1e-14);
  CHECK(berezin_decomposition_residual(SpaceOrder(1), kAbs2, DiskPoint(0.3, 0.0), rule, 0.0).recursion < 1e-5);
  const Integrand quartic = [](Complex w) { return Complex(std::pow(std::norm(w), 2)); };
  for (int n : {3, 5}) {
    CHECK(berezin_decomposition_residual(SpaceOrder(n), quartic, DiskPoint(0.0, 0.6), rule).combination < 1e-9);
  }
}

TEST_CASE("symbol and operator transforms agree") {
  const DiskPoint z(0.3, -0.2);
  const Polynomial f = Polynomial::monomial(2, 1) + Polynomial::monomial(0, 1);
  const auto basis = make_basis(SpaceOrder(2), kernel_cap_for(SpaceOrder(2), 0.4, 1e-9));
  const auto b = operator_berezin(toeplitz_matrix(basis, f), SpaceOrder(2), z);
  const Complex s = symbol_berezin(SpaceOrder(2), [&f](Complex w) { return f.evaluate(w); }, z, default_rule());
  CHECK(std::abs(b.value - s) < 1e-6);
}
