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

#include "doctest.h"
#include "polybergman/polyalg.hpp"

using namespace polybergman;

namespace {
Polynomial m(int p, int q) { return Polynomial::monomial(p, q); }
}  // namespace

TEST_CASE("monomial inner products") {
  CHECK(monomial_inner(0, 0, 0, 0) == 1);
  CHECK(monomial_inner(1, 0, 1, 0) == Rational(1, 2));
  CHECK(monomial_inner(2, 1, 1, 0) == Rational(1, 3));
  CHECK(monomial_inner(1, 0, 0, 1) == 0);
  CHECK(monomial_inner(3, 1, 2, 0) == Rational(1, 4));
}

TEST_CASE("exact L2 inner product") {
  CHECK(inner_product(Polynomial(1), Polynomial(1)) == ComplexRational(1));
  CHECK(inner_product(Polynomial::z(), Polynomial::zbar()).is_zero());
  CHECK(inner_product(m(1, 1), Polynomial(1)) == ComplexRational(Rational(1, 2)));
  // Conjugate-linear in the second slot.
  const ComplexRational i(Rational(0), Rational(1));
  CHECK(inner_product(Polynomial::z(), Polynomial::z() * i) == ComplexRational(Rational(0), Rational(-1, 2)));
  CHECK(inner_product(Polynomial::z() * i, Polynomial::z()) == ComplexRational(Rational(0), Rational(1, 2)));
}

TEST_CASE("polynomial algebra") {
  const Polynomial p = m(1, 0) + m(0, 1);
  const Polynomial q = m(1, 0) - m(0, 1);
  CHECK(p * q == m(2, 0) - m(0, 2));
  CHECK((p - p).is_zero());
  CHECK(p.degree() == 1);
  CHECK(m(2, 3).max_q() == 3);
  CHECK(Polynomial().max_q() == -1);
  CHECK(m(4, 0).is_analytic());
  CHECK_FALSE(m(0, 1).is_analytic());
  const Polynomial c = m(2, 1) * ComplexRational(Rational(1), Rational(2));
  CHECK(c.conj() == m(1, 2) * ComplexRational(Rational(1), Rational(-2)));
  CHECK(c.conj().conj() == c);
  CHECK(std::abs(Polynomial(1).evaluate(Complex(0.3, 0.1)) - 1.0) < 1e-15);
  CHECK(std::abs(m(1, 1).evaluate(Complex(0.5, 0.0)) - 0.25) < 1e-15);
  const Polynomial k0 = Polynomial(4) - m(1, 1) * ComplexRational(6);
  CHECK(std::abs(k0.evaluate(Complex(0.5, 0.0)) - 2.5) < 1e-15);
  CHECK(k0.evaluate(ComplexRational(Rational(1, 2))) == ComplexRational(Rational(5, 2)));
  CHECK(m(1, 2).to_string() == "(1)*z^1*zbar^2");
}

TEST_CASE("polyanalytic polynomials enforce the conj(z) degree bound") {
  CHECK_NOTHROW(PolyanalyticPolynomial(SpaceOrder(2), m(3, 1)));
  CHECK_THROWS_AS(PolyanalyticPolynomial(SpaceOrder(2), m(0, 2)), std::invalid_argument);
  CHECK_THROWS_AS(PolyanalyticPolynomial(SpaceOrder(1), m(0, 1)), std::invalid_argument);
}

TEST_CASE("monomial ordering") {
  const auto ms = ordered_monomials(SpaceOrder(2), 2);
  REQUIRE(ms.size() == 5);
  CHECK(ms[0] == Monomial{0, 0});
  CHECK(ms[1] == Monomial{1, 0});
  CHECK(ms[2] == Monomial{0, 1});
  CHECK(ms[3] == Monomial{2, 0});
  CHECK(ms[4] == Monomial{1, 1});
  CHECK(ordered_monomials(SpaceOrder(1), 5).size() == 6);
  CHECK(ordered_monomials(SpaceOrder(3), 4).size() == 12);
}

TEST_CASE("Gram-Schmidt basis oracles") {
  SUBCASE("n=1, D=2") {
    const OrthonormalBasis b(SpaceOrder(1), 2);
    REQUIRE(b.size() == 3);
    CHECK(b.squared_norm(0) == 1);
    CHECK(b.squared_norm(1) == Rational(1, 2));
    CHECK(b.squared_norm(2) == Rational(1, 3));
    CHECK(b.unnormalized(2) == m(2, 0));
  }
  SUBCASE("n=2, D=1") {
    const OrthonormalBasis b(SpaceOrder(2), 1);
    REQUIRE(b.size() == 3);
    CHECK(b.unnormalized(1) == m(1, 0));
    CHECK(b.unnormalized(2) == m(0, 1));
    CHECK(b.squared_norm(1) == Rational(1, 2));
    CHECK(b.squared_norm(2) == Rational(1, 2));
  }
  SUBCASE("n=2, D=2 contains 2 sqrt(3) (z zbar - 1/2)") {
    const OrthonormalBasis b(SpaceOrder(2), 2);
    bool found = false;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b.unnormalized(i) == m(1, 1) - Polynomial(ComplexRational(Rational(1, 2)))) {
        CHECK(b.squared_norm(i) == Rational(1, 12));
        found = true;
      }
    }
    CHECK(found);
  }
  SUBCASE("prefix structure") {
    const OrthonormalBasis b(SpaceOrder(2), 6);
    CHECK(b.prefix_size(2) == OrthonormalBasis(SpaceOrder(2), 2).size());
    CHECK(b.prefix_size(6) == b.size());
  }
}

TEST_CASE("float and exact evaluations of the basis agree") {
  const OrthonormalBasis b(SpaceOrder(3), 6);
  const ComplexRational w(Rational(1, 3), Rational(-1, 5));
  const auto exact = b.evaluate_unnormalized(w);
  const auto normalized = b.evaluate_all(w.to_complex());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double scale = std::sqrt(b.squared_norm(i).get_d());
    CHECK(std::abs(exact[i].to_complex() / scale - normalized[i]) < 1e-12);
  }
}

TEST_CASE("truncated kernel") {
  const OrthonormalBasis b(SpaceOrder(2), 10);
  const ExactDiskPoint origin(ComplexRational(0));
  const ExactDiskPoint w(ComplexRational(Rational(1, 2)));
  CHECK(b.truncated_kernel_exact(origin, w) == ComplexRational(Rational(5, 2)));
  // Reproducing property inside the exact range.
  const ExactDiskPoint z(ComplexRational(Rational(1, 4), Rational(1, 4)));
  const Polynomial h = m(3, 1) + m(2, 0) * ComplexRational(Rational(0), Rational(3));
  CHECK(b.truncated_kernel_inner(h, z) == h.evaluate(z.value()));
  CHECK(b.kernel_mass(DiskPoint(0.0, 0.0)) == doctest::Approx(1.0));
  CHECK(b.kernel_mass(DiskPoint(0.5, 0.0)) < 1.0);
  CHECK(b.kernel_mass(DiskPoint(0.5, 0.0)) > 0.99);
}

TEST_CASE("kernel cap selection") {
  const int cap = kernel_cap_for(SpaceOrder(2), 0.5, 1e-10);
  CHECK(OrthonormalBasis(SpaceOrder(2), cap).kernel_mass(DiskPoint(0.5, 0.0)) >= 1.0 - 1e-10);
  CHECK(OrthonormalBasis(SpaceOrder(2), cap - 1).kernel_mass(DiskPoint(0.5, 0.0)) < 1.0 - 1e-10);
  CHECK(kernel_cap_for(SpaceOrder(2), 0.0, 1e-10) <= 2);
}

TEST_CASE("LDL pivots detect indefiniteness") {
  std::vector<std::vector<Rational>> a{{Rational(1), Rational(2)}, {Rational(2), Rational(1)}};
  const auto p = ldlt_pivots(a);
  CHECK(p[0] == 1);
  CHECK(p[1] == -3);
}
