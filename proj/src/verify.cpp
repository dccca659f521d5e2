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

#include "polybergman/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "polybergman/identities.hpp"
#include "polybergman/qanalysis.hpp"

namespace polybergman {

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

using Check = std::pair<std::string, std::function<Outcome()>>;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome below(double value, double tol, const std::string& what = "max error") {
  return {value < tol, what + " " + sci(value) + " (tol " + sci(tol) + ")"};
}

/// Rings of radius r k / rings (k = 0..rings) with `spokes` angles each; the origin once.
std::vector<DiskPoint> disk_grid(double radius, int rings, int spokes) {
  std::vector<DiskPoint> g{DiskPoint(0.0, 0.0)};
  for (int k = 1; k <= rings; ++k) {
    const double r = radius * k / rings;
    for (int j = 0; j < spokes; ++j) {
      g.emplace_back(std::polar(r, 2.0 * std::numbers::pi * (j + 0.5 * (k % 2)) / spokes));
    }
  }
  return g;
}

Integrand from_poly(const Polynomial& p) {
  return [p](Complex w) { return p.evaluate(w); };
}

Polynomial zz(int p, int q) { return Polynomial::monomial(p, q); }

// Harmonic test polynomials of degree <= 6: 1, Re w^k, Im w^k.
std::vector<Polynomial> harmonic_family() {
  std::vector<Polynomial> out{Polynomial(1)};
  const Rational half(1, 2);
  for (int k = 1; k <= 6; ++k) {
    out.push_back((zz(k, 0) + zz(0, k)) * ComplexRational(half));
    out.push_back((zz(k, 0) - zz(0, k)) * ComplexRational(Rational(0), -half));
  }
  return out;
}

// ---------------------------------------------------------------- diskgeom

Outcome check_mobius_identity() {
  double worst = 0.0;
  for (const auto& z : disk_grid(0.95, 4, 7)) {
    for (const auto& w : disk_grid(0.9, 3, 5)) {
      const double lhs = 1.0 - std::norm(mobius(z, w));
      const double rhs = (1.0 - z.abs2()) * (1.0 - w.abs2()) / std::norm(1.0 - w.value() * std::conj(z.value()));
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
  }
  return below(worst, 1e-12, "max relative error");
}

Outcome check_norm_identity() {
  const std::vector<ComplexRational> pts{
      {0}, {Rational(1, 2)}, {Rational(0), Rational(-3, 4)}, {Rational(3, 5), Rational(3, 5)},
      {Rational(-19, 20)}, {Rational(2, 3), Rational(-2, 3)}, {Rational(-9, 10), Rational(1, 5)}};
  double worst = 0.0;
  for (int n : {1, 2, 3, 5}) {
    for (const auto& p : pts) {
      const ExactDiskPoint z(p);
      const Rational s = 1 - p.norm();
      const ComplexRational expected(Rational(n * n) / (s * s));
      if (!(kernel_eval_exact(SpaceOrder(n), z, z) == expected)) {
        return {false, "exact kernel norm differs at n=" + std::to_string(n)};
      }
      const DiskPoint zf = z.to_float();
      const double e = expected.re.get_d();
      worst = std::max(worst, std::abs(std::abs(kernel_eval(SpaceOrder(n), zf, zf)) - e) / e);
    }
  }
  return below(worst, 1e-12, "exact match; float relative error");
}

Outcome check_kernel_symmetry_and_forms() {
  double sym = 0.0;
  double forms = 0.0;
  for (int n : {1, 2, 3, 5}) {
    for (const auto& z : disk_grid(0.9, 3, 5)) {
      for (const auto& w : disk_grid(0.8, 2, 3)) {
        const Complex a = kernel_eval(SpaceOrder(n), z, w);
        const Complex b = kernel_eval(SpaceOrder(n), w, z);
        const Complex c = kernel_eval_distance_form(SpaceOrder(n), z, w);
        const double scale = std::max(1.0, std::abs(a));
        sym = std::max(sym, std::abs(a - std::conj(b)) / scale);
        forms = std::max(forms, std::abs(a - c) / scale);
      }
    }
  }
  return {sym < 1e-12 && forms < 1e-12, "hermitian " + sci(sym) + ", forms " + sci(forms) + " (tol 1e-12)"};
}

Outcome check_peak_normalization() {
  double worst = 0.0;
  for (int n : {1, 2, 3, 5}) {
    for (const auto& z : disk_grid(0.95, 4, 5)) {
      const double v = (1.0 - z.abs2()) * std::abs(normalized_kernel_eval(SpaceOrder(n), z, z));
      worst = std::max(worst, std::abs(v - n) / n);
    }
  }
  return below(worst, 1e-12, "max relative error");
}

Outcome check_pseudo_disk() {
  double worst = 0.0;
  for (const auto& z : disk_grid(0.9, 3, 5)) {
    for (double r : {0.1, 0.5, 0.9}) {
      const PseudoDisk d = pseudo_disk(z, r);
      worst = std::max(worst, std::abs(std::abs(d.center - z.value()) + d.inner_radius - d.radius));
      // Boundary points of E(z, r) lie on the Euclidean circle.
      for (int k = 0; k < 8; ++k) {
        const Complex zeta = std::polar(r, 2.0 * std::numbers::pi * k / 8.0);
        const Complex w = mobius(z, DiskPoint(zeta));
        worst = std::max(worst, std::abs(std::abs(w - d.center) - d.radius));
      }
    }
  }
  return below(worst, 1e-12);
}

// ---------------------------------------------------------------- polyalg

Outcome check_reproducing() {
  const std::vector<ExactDiskPoint> pts{ExactDiskPoint(ComplexRational(0)), ExactDiskPoint(ComplexRational(Rational(1, 2))),
                                        ExactDiskPoint(ComplexRational(Rational(1, 4), Rational(1, 4)))};
  int count = 0;
  for (int n : {1, 2, 3}) {
    const int cap = 10;
    const OrthonormalBasis basis(SpaceOrder(n), cap);
    for (const auto& m : ordered_monomials(SpaceOrder(n), cap - (2 * n - 2))) {
      const Polynomial h = zz(m.p, m.q);
      for (const auto& z : pts) {
        if (!(basis.truncated_kernel_inner(h, z) == h.evaluate(z.value()))) {
          return {false, "mismatch for n=" + std::to_string(n) + " h=" + h.to_string()};
        }
        ++count;
      }
    }
  }
  return {true, std::to_string(count) + " exact identities"};
}

Outcome check_truncated_kernel_at_origin() {
  const ExactDiskPoint origin(ComplexRational(0));
  for (int cap = 2; cap <= 8; ++cap) {
    const OrthonormalBasis basis(SpaceOrder(2), cap);
    for (const auto& w : {ComplexRational(Rational(1, 2)), ComplexRational(Rational(1, 3), Rational(-2, 5))}) {
      const ComplexRational expected = ComplexRational(4) - ComplexRational(6 * w.norm());
      if (!(basis.truncated_kernel_exact(origin, ExactDiskPoint(w)) == expected)) {
        return {false, "D=" + std::to_string(cap)};
      }
    }
  }
  return {true, "K_0^(D)(w) = 4 - 6|w|^2 for D = 2..8"};
}

Outcome check_gram_positivity() {
  for (int n : {1, 2, 3, 4}) {
    for (int cap : {4, 8}) {
      for (const auto& p : ldlt_pivots(gram_matrix(ordered_monomials(SpaceOrder(n), cap)))) {
        if (sgn(p) <= 0) return {false, "nonpositive pivot at n=" + std::to_string(n)};
      }
    }
  }
  return {true, "all LDL^T pivots positive"};
}

Outcome check_basis_orthogonality() {
  for (int n : {1, 2, 3}) {
    const OrthonormalBasis basis(SpaceOrder(n), 7);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Polynomial vi = basis.unnormalized(i);
      if (!(inner_product(vi, vi) == ComplexRational(basis.squared_norm(i)))) return {false, "norm mismatch"};
      for (std::size_t j = 0; j < i; ++j) {
        if (!inner_product(vi, basis.unnormalized(j)).is_zero()) return {false, "nonzero inner product"};
      }
    }
  }
  return {true, "exact orthogonality for n = 1..3, D = 7"};
}

Outcome check_weak_decay() {
  const int n = 2;
  const OrthonormalBasis basis(SpaceOrder(n), 4);
  const std::vector<Rational> radii{Rational(1, 2), Rational(9, 10), Rational(99, 100)};
  for (const auto& f : {Polynomial(1), Polynomial::z(), Polynomial::zbar()}) {
    Rational previous = -1;
    for (const auto& r : radii) {
      // <f, k_z> = (1 - |z|^2) <f, K_z> / n.
      const ComplexRational v = basis.truncated_kernel_inner(f, ExactDiskPoint(ComplexRational(r))) * ((1 - r * r) / n);
      const Rational size = v.norm();
      if (sgn(previous) >= 0 && !(size < previous)) return {false, "not decreasing for " + f.to_string()};
      previous = size;
    }
  }
  return {true, "|<f, k_z>| decreasing along 0.5, 0.9, 0.99"};
}

// ---------------------------------------------------------------- diskquad

Outcome check_rule_mass() {
  const auto& rule = default_rule();
  double sum = 0.0;
  for (double w : rule.weights()) {
    if (!(w > 0.0)) return {false, "nonpositive weight"};
    sum += w;
  }
  for (const auto& x : rule.nodes()) {
    if (!(std::abs(x) < 1.0)) return {false, "node outside the disk"};
  }
  return below(std::abs(sum - 1.0), 1e-14, "|sum of weights - 1|");
}

Outcome check_exactness_ladder() {
  const auto& rule = default_rule();
  double worst = 0.0;
  for (int a = 0; a <= 2 * rule.radial() - 1 && 2 * a < rule.angular(); ++a) {
    const Complex v = integrate([a](Complex z) { return Complex(std::pow(std::norm(z), a)); }, rule);
    worst = std::max(worst, std::abs(v - 1.0 / (a + 1)));
  }
  return below(worst, 1e-13);
}

Outcome check_refinement_stability() {
  const DiskQuadratureRule base(64, 256);
  const DiskQuadratureRule fine(128, 512);
  const DiskPoint z(0.5, 0.2);
  const std::vector<Integrand> fs{
      [](Complex w) { return std::exp(w) * std::conj(w); },
      [z](Complex w) { return Complex(std::norm(kernel_eval(SpaceOrder(2), z, DiskPoint(w)))); },
      [](Complex w) { return Complex(1.0 / (2.0 - std::norm(w))); }};
  double worst = 0.0;
  for (const auto& f : fs) worst = std::max(worst, std::abs(integrate(f, base) - integrate(f, fine)));
  return below(worst, 1e-10, "max change");
}

Outcome check_mu_mass_quadrature() {
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const auto mu = mu_coefficients_double(SpaceOrder(n));
    const Complex v = integrate(
        [&mu](Complex w) {
          double s = 0.0;
          for (auto it = mu.rbegin(); it != mu.rend(); ++it) s = s * std::norm(w) + *it;
          return Complex(s);
        },
        default_rule());
    worst = std::max(worst, std::abs(v - 1.0));
  }
  return below(worst, 1e-12);
}

Outcome check_parallel_integrate() {
  const DiskPoint z(0.3, -0.6);
  const Integrand f = [z](Complex w) { return kernel_eval(SpaceOrder(3), z, DiskPoint(w)) * std::conj(w); };
  const Complex a = integrate(f, default_rule());
  const Complex b = integrate_serial(f, default_rule());
  return {a == b, "parallel and serial sums bit-identical"};
}

// ---------------------------------------------------------------- berezin

Outcome check_harmonic_fixed_point() {
  double worst = 0.0;
  const auto grid = disk_grid(0.9, 3, 5);
  for (const auto& u : harmonic_family()) {
    const Integrand f = from_poly(u);
    for (const auto& z : grid) {
      const auto rule = rule_for_point(z.abs());
      const Complex target = u.evaluate(z.value());
      for (int a = 0; a <= 3; ++a) {
        worst = std::max(worst, std::abs(weighted_berezin(BerezinWeight(a), f, z, rule) - target));
      }
      for (int n = 1; n <= 3; ++n) worst = std::max(worst, std::abs(symbol_berezin(SpaceOrder(n), f, z, rule) - target));
    }
  }
  return below(worst, 1e-8);
}

Outcome check_mass_one_berezin() {
  double worst = 0.0;
  for (int n : {1, 2, 3, 5}) {
    for (const auto& z : disk_grid(0.9, 3, 4)) {
      const Complex v = symbol_berezin(SpaceOrder(n), [](Complex) { return Complex(1.0); }, z, rule_for_point(z.abs()));
      worst = std::max(worst, std::abs(v - 1.0));
    }
  }
  return below(worst, 1e-12);
}

Outcome check_decomposition() {
  const std::vector<Polynomial> symbols{zz(1, 1), zz(2, 2), zz(2, 1), zz(4, 0), zz(3, 1) + zz(0, 4), zz(4, 4)};
  double worst = 0.0;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& f : symbols) {
      for (const auto& z : disk_grid(0.9, 2, 3)) {
        const auto r = berezin_decomposition_residual(SpaceOrder(n), from_poly(f), z, rule_for_point(z.abs()));
        worst = std::max(worst, r.combination);
      }
    }
  }
  return below(worst, 1e-9, "max residual");
}

Outcome check_recursion() {
  const Rational half(1, 2);
  const std::vector<Polynomial> us{zz(1, 1), zz(2, 2), (zz(3, 1) + zz(1, 3)) * ComplexRational(half)};
  double worst = 0.0;
  for (const auto& u : us) {
    for (int a = 0; a <= 2; ++a) {
      for (const auto& z : disk_grid(0.7, 2, 3)) {
        const auto r = berezin_decomposition_residual(SpaceOrder(1), from_poly(u), z, default_rule(), a);
        worst = std::max(worst, r.recursion);
      }
    }
  }
  return below(worst, 1e-5, "max residual");
}

Outcome check_commutation() {
  const auto& rule = default_rule();
  const Integrand u = [](Complex w) { return Complex(std::norm(w)); };
  const Integrand lap_u = [](Complex w) {
    const double s = 1.0 - std::norm(w);
    return Complex(4.0 * s * s);
  };
  const BerezinWeight zero(0.0);
  const Integrand b0u = [&](Complex x) { return weighted_berezin(zero, u, DiskPoint(x), rule); };
  double worst = 0.0;
  for (const auto& z : disk_grid(0.7, 2, 3)) {
    const Complex lhs = invariant_laplacian(b0u, z, 1e-2);
    const Complex rhs = weighted_berezin(zero, lap_u, z, rule);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return below(worst, 1e-5);
}

Outcome check_operator_symbol_consistency() {
  const std::vector<Polynomial> symbols{zz(1, 1), zz(2, 0), zz(1, 2), zz(2, 2) + zz(0, 1)};
  const std::vector<DiskPoint> pts{DiskPoint(0.0, 0.0), DiskPoint(0.3, 0.2), DiskPoint(0.0, -0.5), DiskPoint(-0.7, 0.0)};
  double worst = 0.0;
  double min_mass = 1.0;
  for (int n = 1; n <= 3; ++n) {
    const int cap = std::max(12, kernel_cap_for(SpaceOrder(n), 0.7, 1e-7));
    const auto basis = make_basis(SpaceOrder(n), cap);
    for (const auto& f : symbols) {
      const OperatorMatrix t = toeplitz_matrix(basis, f);
      for (const auto& z : pts) {
        const auto b = operator_berezin(t, SpaceOrder(n), z);
        const Complex s = symbol_berezin(SpaceOrder(n), from_poly(f), z, default_rule());
        worst = std::max(worst, std::abs(b.value - s));
        min_mass = std::min(min_mass, b.mass);
      }
    }
  }
  return {worst < 1e-6 && min_mass >= 1.0 - 1e-6,
          "max difference " + sci(worst) + " (tol 1e-6), min mass " + sci(min_mass)};
}

Outcome check_compactness_probe() {
  const Integrand f = [](Complex w) { return Complex(1.0 - std::norm(w)); };
  std::string detail;
  for (int n = 1; n <= 3; ++n) {
    double previous = 2.0;
    for (double r : {0.5, 0.9, 0.99}) {
      const double v = symbol_berezin(SpaceOrder(n), f, DiskPoint(r, 0.0), rule_for_point(r)).real();
      if (!(v < previous)) return {false, "not decreasing at n=" + std::to_string(n)};
      previous = v;
    }
    if (!(previous < 0.1)) return {false, "Bf(0.99) = " + sci(previous) + " at n=" + std::to_string(n)};
    detail += "n=" + std::to_string(n) + ": Bf(0.99)=" + sci(previous) + " ";
  }
  return {true, detail};
}

Outcome check_berezin_anchors() {
  const auto& rule = default_rule();
  const DiskPoint origin(0.0, 0.0);
  const Integrand abs2 = [](Complex w) { return Complex(std::norm(w)); };
  double worst = 0.0;
  worst = std::max(worst, std::abs(weighted_berezin(BerezinWeight(0), abs2, origin, rule) - 0.5));
  worst = std::max(worst, std::abs(weighted_berezin(BerezinWeight(1), abs2, origin, rule) - 1.0 / 3.0));
  worst = std::max(worst, std::abs(symbol_berezin(SpaceOrder(2), abs2, origin, rule) - 0.25));
  const auto t = toeplitz_matrix(SpaceOrder(2), 10, zz(1, 1));
  worst = std::max(worst, std::abs(operator_berezin(t, SpaceOrder(2), origin).value - 0.25));
  return below(worst, 1e-10);
}

// ---------------------------------------------------------------- toeplitz

Outcome check_adjoint_symmetry() {
  const std::vector<Polynomial> symbols{
      zz(1, 0), zz(0, 2), zz(2, 1) * ComplexRational(Rational(1, 3), Rational(2)), zz(1, 1) + zz(3, 0)};
  for (int n : {1, 2, 3}) {
    const auto basis = make_basis(SpaceOrder(n), 6);
    for (const auto& f : symbols) {
      const auto a = toeplitz_matrix(basis, f.conj());
      const auto b = toeplitz_matrix(basis, f);
      if (!(a.gram() == b.gram().conjugate_transpose())) return {false, "T_conj(f) != T_f^* for " + f.to_string()};
    }
    const auto h = toeplitz_matrix(basis, zz(1, 1) + zz(2, 0) + zz(0, 2));
    if (!(h.gram() == h.gram().conjugate_transpose())) return {false, "real symbol not hermitian"};
  }
  return {true, "exact for n = 1..3, D = 6"};
}

Outcome check_toeplitz_examples() {
  const auto basis = make_basis(SpaceOrder(2), 5);
  if (!(toeplitz_matrix(basis, Polynomial(1)).gram() == OperatorMatrix::identity(basis).gram())) {
    return {false, "T_1 is not the identity"};
  }
  double worst = 0.0;
  const auto t1 = toeplitz_matrix(SpaceOrder(1), 6, Polynomial::z());
  for (int p = 0; p < 6; ++p) {
    worst = std::max(worst, std::abs(t1.values()(p + 1, p) - std::sqrt((p + 1.0) / (p + 2.0))));
  }
  const auto t2 = toeplitz_matrix(SpaceOrder(2), 1, Polynomial::zbar());
  // Basis order 1, z, zbar: entry <zbar * 1, e_zbar>.
  worst = std::max(worst, std::abs(t2.values()(2, 0) - std::sqrt(2.0) / 2.0));
  return below(worst, 1e-14);
}

Outcome check_rank_one() {
  const auto basis = make_basis(SpaceOrder(2), 5);
  const Polynomial x = zz(1, 1) + zz(2, 0) * ComplexRational(Rational(1, 2), Rational(1));
  const Polynomial y = zz(0, 1) + Polynomial(3);
  const auto m = rank_one_matrix(x, y, basis);
  ComplexRational trace;
  for (std::size_t i = 0; i < basis->size(); ++i) trace += m.gram()(i, i) / basis->squared_norm(i);
  if (!(trace == inner_product(x, y))) return {false, "trace differs from <x, y>"};
  if (numerical_rank(m, 1e-8) != 1) return {false, "rank is not 1"};
  const auto e = rank_one_matrix(Polynomial(1), Polynomial(1), basis);
  for (std::size_t i = 0; i < basis->size(); ++i) {
    for (std::size_t j = 0; j < basis->size(); ++j) {
      if (!(e.values()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) == Complex(i == 0 && j == 0 ? 1.0 : 0.0))) {
        return {false, "1 (x) 1 is not the (0,0) unit matrix"};
      }
    }
  }
  return {true, "trace = <x, y>, rank 1, 1 (x) 1 = E_00"};
}

Outcome check_quadrature_toeplitz() {
  const auto basis = make_basis(SpaceOrder(2), 6);
  const auto exact = toeplitz_matrix(basis, Polynomial(1) - zz(1, 1));
  const auto quad = toeplitz_matrix_quadrature(basis, [](Complex w) { return Complex(1.0 - std::norm(w)); }, default_rule());
  return below((exact.values() - quad.values()).cwiseAbs().maxCoeff(), 1e-10, "max entry difference");
}

Outcome check_numerical_rank_basics() {
  const auto basis = make_basis(SpaceOrder(2), 4);
  const int m = static_cast<int>(basis->size());
  const bool ok = numerical_rank(OperatorMatrix::identity(basis), 1e-8) == m &&
                  numerical_rank(ComplexMatrix::Zero(m, m), 1e-8) == 0;
  return {ok, "identity rank " + std::to_string(m) + ", zero rank 0"};
}

Outcome check_commutator_basics() {
  const auto basis = make_basis(SpaceOrder(1), 8);
  const auto tz = toeplitz_matrix(basis, Polynomial::z());
  const auto tzb = toeplitz_matrix(basis, Polynomial::zbar());
  if (!commutator(OperatorMatrix::identity(basis), tz).gram().is_zero()) return {false, "[I, A] != 0"};
  const auto c = commutator(tzb, tz);
  for (std::size_t i : interior_indices(*basis, 7)) {
    if (!(c.gram()(i, i).re > 0)) return {false, "nonpositive diagonal entry"};
  }
  return {true, "[I, A] = 0; [T_zbar, T_z] has positive interior diagonal"};
}

Outcome check_interior_multiplicativity() {
  const std::vector<std::pair<Polynomial, Polynomial>> pairs{
      {Polynomial::zbar(), Polynomial::z()}, {zz(1, 1) + zz(0, 2), zz(2, 0)}, {zz(0, 1), zz(1, 0) + zz(3, 0)}};
  for (int n : {1, 2, 3}) {
    const int cap = 8;
    const auto basis = make_basis(SpaceOrder(n), cap);
    for (const auto& [u, v] : pairs) {
      const auto sc = semi_commutator(toeplitz_matrix(basis, u), toeplitz_matrix(basis, v), toeplitz_matrix(basis, u * v));
      if (!block_is_exactly_zero(sc, interior_indices(*basis, cap - v.degree()))) {
        return {false, "nonzero interior entry for n=" + std::to_string(n)};
      }
    }
  }
  return {true, "T_u T_v - T_uv vanishes on the interior block"};
}

Outcome check_rank_growth() {
  const Polynomial u = Polynomial::zbar() + Polynomial::z();
  const Polynomial v = Polynomial::zbar() - Polynomial::z();
  std::string detail;
  for (int n : {1, 2}) {
    int previous = -1;
    for (int cap : {4, 6, 8, 10, 12}) {
      const int r = numerical_rank(compressed_product(SpaceOrder(n), cap, u, v), 1e-8);
      if (r < previous) return {false, "rank decreased at n=" + std::to_string(n)};
      previous = r;
    }
    if (previous <= 3) return {false, "rank at D=12 is " + std::to_string(previous)};
    detail += "n=" + std::to_string(n) + ": rank(D=12)=" + std::to_string(previous) + " ";
  }
  return {true, detail};
}

Outcome check_commutator_growth() {
  std::string detail;
  for (int n : {1, 2}) {
    int previous = -1;
    for (int cap : {4, 6, 8, 10, 12}) {
      const auto basis = make_basis(SpaceOrder(n), cap);
      const auto c = commutator(toeplitz_matrix(basis, Polynomial::z()), toeplitz_matrix(basis, Polynomial::zbar()));
      const int r = numerical_rank(principal_block(c.values(), interior_indices(*basis, cap - 2)), 1e-8);
      if (r < previous) return {false, "rank decreased at n=" + std::to_string(n)};
      previous = r;
    }
    detail += "n=" + std::to_string(n) + ": rank(D=12)=" + std::to_string(previous) + " ";
  }
  return {true, detail};
}

Outcome check_finite_rank_anchor() {
  // d = 1, u = v = F = 1: T_1 T_1 - T_1 = 0, so both sides of the finite-rank identity vanish.
  const auto basis = make_basis(SpaceOrder(2), 6);
  const auto one = toeplitz_matrix(basis, Polynomial(1));
  return {semi_commutator(one, one, one).gram().is_zero(), "T_1 T_1 - T_1 = 0 exactly"};
}

Outcome check_antianalytic_eigen() {
  double worst = 0.0;
  const DiskPoint z(0.4, 0.0);
  for (int n : {1, 2, 3}) {
    if (antianalytic_eigen_check(SpaceOrder(n), 12, Polynomial(ComplexRational(Rational(3), Rational(-1))), z) != 0.0) {
      return {false, "constant symbol is not exact"};
    }
    for (const auto& f : {Polynomial::z(), zz(2, 0) + Polynomial(1)}) {
      worst = std::max(worst, antianalytic_eigen_check(SpaceOrder(n), 12, f, z));
      worst = std::max(worst, antianalytic_eigen_check(SpaceOrder(n), 12, f, DiskPoint(-0.2, 0.5)));
    }
  }
  return below(worst, 1e-8);
}

Outcome check_product_formula() {
  const auto& rule = default_rule();
  const auto one = HarmonicSymbol::analytic(Polynomial(1));
  const auto zb = HarmonicSymbol::coanalytic(Polynomial::z());
  const auto z1 = HarmonicSymbol::analytic(Polynomial::z());
  const auto f = HarmonicSymbol::analytic(Polynomial::z() + Polynomial(2));
  const auto kbar = HarmonicSymbol::coanalytic(zz(2, 0));
  // Truncated kernels converge like (|z||w|)^D; the near pairs reach 1e-12 at moderate D.
  const std::vector<std::pair<DiskPoint, DiskPoint>> near{
      {DiskPoint(-0.3, 0.3), DiskPoint(0.2, 0.1)}, {DiskPoint(0.0, 0.0), DiskPoint(0.4, -0.2)}, {DiskPoint(0.1, 0.0), DiskPoint(0.0, 0.2)}};
  double trivial = 0.0;
  double low_cap = 0.0;
  for (const auto& [z, w] : near) {
    trivial = std::max(trivial, product_formula_check(SpaceOrder(2), 22, one, one, z, w, rule).off_diagonal);
    low_cap = std::max(low_cap, product_formula_check(SpaceOrder(2), 14, zb, z1, z, w, rule).off_diagonal);
  }
  double mixed = 0.0;
  auto all = near;
  all.emplace_back(DiskPoint(0.5, 0.0), DiskPoint(0.0, 0.5));
  for (const auto& [z, w] : all) {
    mixed = std::max(mixed, product_formula_check(SpaceOrder(2), 22, f, kbar, z, w, rule).off_diagonal);
    mixed = std::max(mixed, product_formula_check(SpaceOrder(2), 22, zb, z1, z, w, rule).off_diagonal);
  }
  const bool ok = trivial < 1e-12 && low_cap < 1e-6 && mixed < 1e-6;
  return {ok, "u=v=1: " + sci(trivial) + " (tol 1e-12); zbar*z at D=14, |z|,|w|<=0.45: " + sci(low_cap) +
                  "; harmonic pairs at D=22, |z|,|w|<=0.5: " + sci(mixed) + " (tol 1e-6)"};
}

Outcome check_berezin_product() {
  const auto& rule = default_rule();
  const std::vector<std::pair<HarmonicSymbol, HarmonicSymbol>> pairs{
      {HarmonicSymbol::coanalytic(Polynomial::z()), HarmonicSymbol::analytic(Polynomial::z())},
      {HarmonicSymbol(Polynomial::z(), Polynomial::z()), HarmonicSymbol(zz(2, 0), Polynomial::z())},
      {HarmonicSymbol::analytic(Polynomial::z()), HarmonicSymbol::coanalytic(Polynomial::z())}};
  double worst = 0.0;
  for (const auto& [u, v] : pairs) {
    for (const auto& z : disk_grid(0.5, 2, 3)) {
      worst = std::max(worst, product_formula_check(SpaceOrder(2), 22, u, v, z, z, rule).diagonal);
    }
  }
  return below(worst, 1e-6);
}

Outcome check_witness() {
  const auto grid = disk_grid(0.7, 3, 5);
  const auto w2 = noninjectivity_witness(SpaceOrder(2), 6, grid);
  const auto w1 = noninjectivity_witness(SpaceOrder(1), 6, grid);
  const bool ok = w2.berezin_sup < 1e-8 && w2.frobenius > 0.1 && w1.exactly_equal;
  return {ok, "n=2: Berezin sup " + sci(w2.berezin_sup) + ", Frobenius " + sci(w2.frobenius) +
                  "; n=1 exact equality " + (w1.exactly_equal ? "yes" : "no")};
}

// ---------------------------------------------------------------- qanalysis

Outcome check_q_examples() {
  const bool mu2 = mu_poly(SpaceOrder(2)) == RationalPolynomial({Rational(4), Rational(-12), Rational(9)});
  const bool mu3 = mu_poly(SpaceOrder(3)) ==
                   RationalPolynomial({Rational(9), Rational(-72), Rational(204), Rational(-240), Rational(100)});
  const bool b3 = b_coefficients(SpaceOrder(3)) ==
                  std::vector<Rational>{Rational(1), Rational(-16), Rational(84), Rational(-160), Rational(100)};
  const bool q2 = Q_poly(SpaceOrder(2)) == RationalPolynomial({Rational(1), Rational(-1, 8), Rational(1, 64)});
  const bool q1 = Q_poly(SpaceOrder(1)) == RationalPolynomial({Rational(1)});
  return {mu2 && mu3 && b3 && q2 && q1, "mu, b, Q for n = 1, 2, 3"};
}

Outcome check_mass_one_exact() {
  for (int n = 1; n <= 200; ++n) {
    const auto b = b_coefficients(SpaceOrder(n));
    Rational s = 0;
    for (std::size_t k = 0; k < b.size(); ++k) s += b[k] / Rational(static_cast<long>(k + 1));
    if (s != 1) return {false, "sum b_k/(k+1) != 1 at n=" + std::to_string(n)};
  }
  return {true, "sum b_k/(k+1) = 1 for n = 1..200"};
}

Outcome check_involution_and_q0() {
  for (int n = 1; n <= 60; ++n) {
    const auto b = b_coefficients(SpaceOrder(n));
    if (!(RationalPolynomial(b).reflect() == mu_poly(SpaceOrder(n)))) return {false, "involution fails at n=" + std::to_string(n)};
    if (Q_poly(SpaceOrder(n)).coefficient(0) != 1) return {false, "Q(0) != 1 at n=" + std::to_string(n)};
  }
  return {true, "mu recovered from b and Q(0) = 1 for n = 1..60"};
}

Outcome check_root_examples() {
  const auto r2 = roots_with_enclosures(RationalPolynomial({Rational(-1), Rational(0), Rational(1)}));
  const auto dbl = roots_with_enclosures(RationalPolynomial({Rational(1), Rational(-2), Rational(1)}));
  bool ok = r2.size() == 2 && r2[0].certified && r2[1].certified &&
            std::abs(std::abs(r2[0].approximation.real() * r2[1].approximation.real()) - 1.0) < 1e-12;
  ok = ok && dbl.size() == 2 && !dbl[0].certified && dbl[0].multiplicity == 2;
  const bool margins = omega_margin(Complex(0.0)) == 0.0 && omega_margin(Complex(-1.0)) == -4.0 &&
                       std::abs(omega_margin(Complex(4.0, 4.0 * std::sqrt(3.0))) - 64.0) < 1e-12;
  return {ok && margins, "t^2-1 certified, (t-1)^2 flagged as a cluster of 2, margins"};
}

Outcome check_q2_roots() {
  const auto r = analyze_Q(SpaceOrder(2));
  bool ok = r.verdict == Verdict::all_outside && r.roots.size() == 2 && r.negative_real_parts == 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    const auto& root = r.roots[i];
    ok = ok && root.certified && root.radius < 1e-10;
    worst = std::max(worst, std::abs(std::abs(root.approximation - Complex(4.0, 0.0)) - 4.0 * std::sqrt(3.0)));
    worst = std::max(worst, std::abs(r.margins[i] - 64.0));
  }
  return {ok && worst < 1e-8, "roots 4 +- 4 sqrt(3) i, margins 64, error " + sci(worst)};
}

Outcome check_scan_claim() {
  const auto reports = scan_Q(1, 25);
  for (const auto& r : reports) {
    if (r.verdict != Verdict::all_outside) return {false, "n=" + std::to_string(r.n) + ": " + to_string(r.verdict)};
    if (r.n == 1 && !r.roots.empty()) return {false, "n=1 should have no roots"};
  }
  double min_margin = 1e300;
  for (const auto& r : reports) {
    if (r.n >= 2) min_margin = std::min(min_margin, r.min_margin);
  }
  return {true, "all_outside for n = 1..25, min margin " + sci(min_margin)};
}

double log2_abs(const Rational& q) {
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log2(std::abs(mn) / md) + static_cast<double>(en - ed);
}

Outcome check_root_residuals() {
  for (int n = 2; n <= 25; ++n) {
    const auto q = Q_poly(SpaceOrder(n));
    const auto roots = roots_with_enclosures(q);
    if (static_cast<int>(roots.size()) != q.degree()) return {false, "root count at n=" + std::to_string(n)};
    for (const auto& root : roots) {
      // |Q(lambda)| exactly at the rationalized approximation, compared in log scale.
      const Rational v = q(root.exact).norm();
      if (sgn(v) == 0) continue;
      const double log_v = 0.5 * log2_abs(v);
      const double log_bound =
          std::log2(1e-20) + log2_abs(q.leading()) + q.degree() * std::log2(std::max(1.0, std::abs(root.approximation)));
      if (!(log_v < log_bound)) return {false, "residual too large at n=" + std::to_string(n)};
    }
  }
  return {true, "|Q(lambda)| < 1e-20 |lc| max(1,|lambda|)^deg for n = 2..25"};
}

Outcome check_scan_parallel_matches_serial() {
  const auto a = scan_Q(2, 12);
  const auto b = scan_Q_serial(2, 12);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].roots.size() != b[i].roots.size()) return {false, "root count differs"};
    for (std::size_t k = 0; k < a[i].roots.size(); ++k) {
      if (!(a[i].roots[k].exact == b[i].roots[k].exact)) return {false, "approximations differ"};
    }
  }
  return {true, "scan_Q and scan_Q_serial agree exactly for n = 2..12"};
}

std::vector<Check> core_checks() {
  return {
      {"mobius_identity", check_mobius_identity},
      {"kernel_norm_identity", check_norm_identity},
      {"kernel_hermitian_and_forms", check_kernel_symmetry_and_forms},
      {"kernel_peak_normalization", check_peak_normalization},
      {"pseudo_disk_geometry", check_pseudo_disk},
      {"reproducing_property_exact", check_reproducing},
      {"truncated_kernel_at_origin", check_truncated_kernel_at_origin},
      {"gram_positivity", check_gram_positivity},
      {"basis_orthogonality", check_basis_orthogonality},
      {"weak_decay_trend", check_weak_decay},
      {"quadrature_mass", check_rule_mass},
      {"quadrature_exactness_ladder", check_exactness_ladder},
      {"quadrature_refinement_stability", check_refinement_stability},
      {"mu_mass_quadrature", check_mu_mass_quadrature},
      {"integrate_parallel_matches_serial", check_parallel_integrate},
      {"berezin_anchors", check_berezin_anchors},
      {"harmonic_fixed_point", check_harmonic_fixed_point},
      {"berezin_mass_one", check_mass_one_berezin},
      {"decomposition_identity", check_decomposition},
      {"weighted_recursion", check_recursion},
      {"laplacian_commutation", check_commutation},
      {"operator_symbol_consistency", check_operator_symbol_consistency},
      {"compactness_probe", check_compactness_probe},
      {"toeplitz_examples", check_toeplitz_examples},
      {"adjoint_symmetry", check_adjoint_symmetry},
      {"rank_one_operator", check_rank_one},
      {"quadrature_toeplitz", check_quadrature_toeplitz},
      {"numerical_rank_basics", check_numerical_rank_basics},
      {"commutator_basics", check_commutator_basics},
      {"interior_multiplicativity", check_interior_multiplicativity},
      {"finite_rank_anchor", check_finite_rank_anchor},
      {"antianalytic_eigen", check_antianalytic_eigen},
      {"product_kernel_formula", check_product_formula},
      {"berezin_product_diagonal", check_berezin_product},
      {"noninjectivity_witness", check_witness},
      {"rank_growth", check_rank_growth},
      {"commutator_rank_growth", check_commutator_growth},
      {"q_construction", check_q_examples},
      {"mass_one_exact", check_mass_one_exact},
      {"basis_change_involution", check_involution_and_q0},
      {"root_examples", check_root_examples},
      {"q2_roots", check_q2_roots},
      {"q_scan_2_25", check_scan_claim},
      {"root_residuals", check_root_residuals},
      {"scan_parallel_matches_serial", check_scan_parallel_matches_serial},
  };
}

std::vector<Check> quick_checks() {
  return {
      {"mobius_identity", check_mobius_identity},
      {"kernel_norm_identity", check_norm_identity},
      {"reproducing_property_exact", check_reproducing},
      {"quadrature_mass", check_rule_mass},
      {"berezin_anchors", check_berezin_anchors},
      {"adjoint_symmetry", check_adjoint_symmetry},
      {"q_construction", check_q_examples},
      {"q2_roots", check_q2_roots},
  };
}

}  // namespace

std::vector<std::string> suite_names() { return {"core", "quick"}; }

std::vector<CheckResult> run_suite(const std::string& suite, const std::function<void(const CheckResult&)>& on_result) {
  std::vector<Check> checks;
  if (suite == "core") {
    checks = core_checks();
  } else if (suite == "quick") {
    checks = quick_checks();
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  std::vector<CheckResult> results;
  for (const auto& [name, fn] : checks) {
    CheckResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = fn();
      r.passed = o.ok;
      r.detail = o.detail;
    } catch (const std::exception& ex) {
      r.passed = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace polybergman
