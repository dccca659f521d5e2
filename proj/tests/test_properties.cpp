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

// Randomized invariant checks with fixed seeds.

#include <cmath>
#include <random>

#include "doctest.h"
#include "polybergman/berezin.hpp"
#include "polybergman/qanalysis.hpp"
#include "polybergman/toeplitz.hpp"

using namespace polybergman;

namespace {

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  DiskPoint point(double max_radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return DiskPoint(std::polar(max_radius * std::sqrt(u(rng)), 2.0 * M_PI * u(rng)));
  }
  Rational small_rational() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  }
  ExactDiskPoint exact_point() {
    // |re|, |im| <= 9/14 < 1/sqrt(2) keeps the point inside.
    const Rational re = small_rational() / 14;
    const Rational im = small_rational() / 14;
    return ExactDiskPoint(ComplexRational(re, im));
  }
  Polynomial polynomial(int max_degree, int max_q) {
    std::uniform_int_distribution<int> d(0, max_degree);
    std::uniform_int_distribution<int> count(1, 4);
    Polynomial p;
    for (int k = count(rng); k > 0; --k) {
      const int q = std::uniform_int_distribution<int>(0, max_q)(rng);
      const int p_exp = std::max(0, d(rng) - q);
      p += Polynomial::monomial(p_exp, q, ComplexRational(small_rational(), small_rational()));
    }
    return p;
  }
};

}  // namespace

TEST_CASE("mobius identity on random points") {
  Sampler s(11);
  for (int k = 0; k < 200; ++k) {
    const DiskPoint z = s.point(0.97);
    const DiskPoint w = s.point(0.97);
    const double lhs = 1.0 - std::norm(mobius(z, w));
    const double rhs = (1.0 - z.abs2()) * (1.0 - w.abs2()) / std::norm(1.0 - w.value() * std::conj(z.value()));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
  }
}

TEST_CASE("kernel is Hermitian and both forms agree on random points") {
  Sampler s(12);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + k % 5;
    const DiskPoint z = s.point(0.9);
    const DiskPoint w = s.point(0.9);
    const Complex a = kernel_eval(SpaceOrder(n), z, w);
    const double scale = std::max(1.0, std::abs(a));
    CHECK(std::abs(a - std::conj(kernel_eval(SpaceOrder(n), w, z))) <= 1e-12 * scale);
    CHECK(std::abs(a - kernel_eval_distance_form(SpaceOrder(n), z, w)) <= 1e-12 * scale);
  }
}

TEST_CASE("exact kernel norm identity on random rational points") {
  Sampler s(13);
  for (int k = 0; k < 40; ++k) {
    const int n = 1 + k % 4;
    const ExactDiskPoint z = s.exact_point();
    const Rational t = 1 - z.value().norm();
    CHECK(kernel_eval_exact(SpaceOrder(n), z, z) == ComplexRational(Rational(n * n) / (t * t)));
  }
}

TEST_CASE("reproducing property for random polyanalytic polynomials") {
  Sampler s(14);
  for (int n = 1; n <= 3; ++n) {
    const OrthonormalBasis basis(SpaceOrder(n), 9);
    for (int k = 0; k < 6; ++k) {
      const Polynomial h = s.polynomial(9 - (2 * n - 2), n - 1);
      const ExactDiskPoint z = s.exact_point();
      CHECK(basis.truncated_kernel_inner(h, z) == h.evaluate(z.value()));
    }
  }
}

TEST_CASE("adjoint symmetry for random symbols") {
  Sampler s(15);
  for (int k = 0; k < 8; ++k) {
    const int n = 1 + k % 3;
    const auto basis = make_basis(SpaceOrder(n), 5);
    const Polynomial f = s.polynomial(4, 3);
    CHECK(toeplitz_matrix(basis, f.conj()).gram() == toeplitz_matrix(basis, f).gram().conjugate_transpose());
    const Polynomial real = f + f.conj();
    const auto h = toeplitz_matrix(basis, real);
    CHECK(h.gram() == h.gram().conjugate_transpose());
  }
}

TEST_CASE("interior multiplicativity for random analytic right factors") {
  Sampler s(16);
  for (int k = 0; k < 8; ++k) {
    const int n = 1 + k % 3;
    const int cap = 7;
    const auto basis = make_basis(SpaceOrder(n), cap);
    const Polynomial u = s.polynomial(3, 3);
    const Polynomial v = s.polynomial(3, 0);
    const auto sc = semi_commutator(toeplitz_matrix(basis, u), toeplitz_matrix(basis, v), toeplitz_matrix(basis, u * v));
    CHECK(block_is_exactly_zero(sc, interior_indices(*basis, cap - v.degree())));
  }
}

TEST_CASE("Berezin transforms fix random harmonic polynomials") {
  Sampler s(17);
  for (int k = 0; k < 10; ++k) {
    const Polynomial a = s.polynomial(5, 0);
    const Polynomial b = s.polynomial(5, 0);
    const Polynomial u = a + b.conj();
    const Integrand f = [&u](Complex w) { return u.evaluate(w); };
    const DiskPoint z = s.point(0.9);
    const auto rule = rule_for_point(z.abs());
    const Complex target = u.evaluate(z.value());
    const double scale = std::max(1.0, std::abs(target));
    CHECK(std::abs(weighted_berezin(BerezinWeight(k % 4), f, z, rule) - target) < 1e-8 * scale);
    CHECK(std::abs(symbol_berezin(SpaceOrder(1 + k % 3), f, z, rule) - target) < 1e-8 * scale);
  }
}

TEST_CASE("Berezin transforms have mass one and preserve positivity") {
  Sampler s(18);
  const Integrand positive = [](Complex w) { return Complex(1.0 + std::norm(w) * w.real() * w.real()); };
  for (int k = 0; k < 20; ++k) {
    const DiskPoint z = s.point(0.9);
    const auto rule = rule_for_point(z.abs());
    CHECK(std::abs(weighted_berezin(BerezinWeight(0.5 * k), [](Complex) { return Complex(1.0); }, z, rule) - 1.0) < 1e-12);
    CHECK(weighted_berezin(BerezinWeight(0), positive, z, rule).real() >= 1.0 - 1e-12);
  }
}

TEST_CASE("mass one and Q(0) = 1 across orders") {
  for (int n = 1; n <= 40; ++n) {
    const auto b = b_coefficients(SpaceOrder(n));
    Rational sum = 0;
    for (std::size_t k = 0; k < b.size(); ++k) sum += b[k] / Rational(static_cast<long>(k + 1));
    CHECK(sum == 1);
    CHECK(Q_poly(SpaceOrder(n)).coefficient(0) == 1);
    CHECK(RationalPolynomial(b).reflect() == mu_poly(SpaceOrder(n)));
  }
}

TEST_CASE("certified enclosures each contain exactly one known root") {
  Sampler s(19);
  for (int k = 0; k < 10; ++k) {
    // Conjugate pairs a +- ib with distinct rational parts, plus one real root.
    RationalPolynomial p({Rational(1)});
    std::vector<ComplexRational> known;
    while (known.size() < 8) {
      const ComplexRational r(s.small_rational(), s.small_rational() + Rational(1, 3));
      bool fresh = sgn(r.im) != 0;
      for (const auto& x : known) fresh = fresh && !(x == r) && !(x == r.conj());
      if (!fresh) continue;
      known.push_back(r);
      known.push_back(r.conj());
      p = p * RationalPolynomial({r.norm(), -2 * r.re, Rational(1)});
    }
    const Rational real_root = s.small_rational();
    known.emplace_back(real_root);
    p = p * RationalPolynomial({-real_root, Rational(1)});

    const auto roots = roots_with_enclosures(p);
    REQUIRE(roots.size() == known.size());
    for (const auto& root : roots) {
      CHECK(root.certified);
      int inside = 0;
      for (const auto& x : known) inside += std::abs((root.exact - x).to_complex()) <= root.radius ? 1 : 0;
      CHECK(inside == 1);
      CHECK(root.radius < 1e-8 * (1.0 + std::abs(root.approximation)));
    }
  }
}
