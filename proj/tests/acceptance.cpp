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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "polybergman/berezin.hpp"
#include "polybergman/identities.hpp"
#include "polybergman/qanalysis.hpp"
#include "polybergman/toeplitz.hpp"
#include "polybergman/verify.hpp"

using namespace polybergman;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::vector<DiskPoint> grid(double radius, int rings, int spokes) {
  std::vector<DiskPoint> g{DiskPoint(0.0, 0.0)};
  for (int k = 1; k <= rings; ++k) {
    for (int j = 0; j < spokes; ++j) {
      g.emplace_back(std::polar(radius * k / rings, 2.0 * std::numbers::pi * (j + 0.5 * (k % 2)) / spokes));
    }
  }
  return g;
}

Polynomial mono(int p, int q) { return Polynomial::monomial(p, q); }

Integrand from(const Polynomial& p) {
  return [p](Complex w) { return p.evaluate(w); };
}

Outcome q_ground_truth() {
  Outcome v;
  v.require(Q_poly(SpaceOrder(2)) == RationalPolynomial({Rational(1), Rational(-1, 8), Rational(1, 64)}), "Q_2 coefficients");
  const auto r = analyze_Q(SpaceOrder(2));
  v.require(r.roots.size() == 2, "root count");
  double worst_root = 0.0;
  double worst_margin = 0.0;
  double worst_radius = 0.0;
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    const auto& root = r.roots[i];
    v.require(root.certified, "uncertified root");
    worst_radius = std::max(worst_radius, root.radius);
    const double target_im = root.approximation.imag() > 0 ? 4.0 * std::sqrt(3.0) : -4.0 * std::sqrt(3.0);
    worst_root = std::max(worst_root, std::abs(root.approximation - Complex(4.0, target_im)));
    worst_margin = std::max(worst_margin, std::abs(r.margins[i] - 64.0));
  }
  v.require(worst_radius < 1e-10, "radius " + sci(worst_radius));
  v.require(worst_root <= worst_radius + 1e-14, "root location off by " + sci(worst_root));
  v.require(worst_margin < 1e-8, "margin off by " + sci(worst_margin));
  v.require(r.verdict == polybergman::Verdict::all_outside, "verdict " + to_string(r.verdict));
  if (v.ok) v.note = "Q = 1 - t/8 + t^2/64, roots 4 +- 4 sqrt(3) i, radius " + sci(worst_radius) + ", margins 64";
  return v;
}

Outcome scan_claim() {
  Outcome v;
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = scan_Q(2, 25);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double min_margin = 1e300;
  for (const auto& r : reports) {
    v.require(r.verdict == polybergman::Verdict::all_outside, "n=" + std::to_string(r.n) + " " + to_string(r.verdict));
    min_margin = std::min(min_margin, r.min_margin);
  }
  v.require(seconds < 60.0, "scan 2..25 took " + sci(seconds) + " s");

  // Extended exploration: every root certified, verdicts recorded.
  const auto t1 = std::chrono::steady_clock::now();
  const auto extended = scan_Q(26, 100);
  const double seconds_ext = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
  int outside = 0;
  double ext_margin = 1e300;
  for (const auto& r : extended) {
    v.require(r.error.empty(), "n=" + std::to_string(r.n) + ": " + r.error);
    for (const auto& root : r.roots) {
      if (!root.certified) {
        v.require(false, "n=" + std::to_string(r.n) + " has an uncertified root");
        break;
      }
    }
    outside += r.verdict == polybergman::Verdict::all_outside ? 1 : 0;
    ext_margin = std::min(ext_margin, r.min_margin);
  }
  if (v.ok) {
    v.note = "n=2..25 all_outside in " + sci(seconds) + " s (min margin " + sci(min_margin) + "); n=26..100 certified in " +
             sci(seconds_ext) + " s, " + std::to_string(outside) + "/75 all_outside (min margin " + sci(ext_margin) + ")";
  }
  return v;
}

Outcome kernel_norm_identity() {
  Outcome v;
  // 20 points: the origin plus rings at 0.3, 0.6, 0.8, 0.95 (|z| <= 0.95).
  std::vector<DiskPoint> pts{DiskPoint(0.0, 0.0)};
  const std::vector<std::pair<double, int>> rings{{0.3, 4}, {0.6, 5}, {0.8, 5}, {0.95, 5}};
  for (const auto& [r, count] : rings) {
    for (int j = 0; j < count; ++j) pts.emplace_back(std::polar(r, 2.0 * std::numbers::pi * (j + 0.25) / count));
  }
  double worst = 0.0;
  for (int n : {1, 2, 3, 5}) {
    for (const auto& z : pts) {
      // The peak at z sharpens as |z| -> 1; the rule is refined with it.
      const int radial = z.abs() > 0.9 ? 512 : z.abs() > 0.7 ? 256 : 128;
      const DiskQuadratureRule rule(radial, 4 * radial);
      const Complex mass = integrate([&](Complex w) { return Complex(std::norm(kernel_eval(SpaceOrder(n), z, DiskPoint(w)))); }, rule);
      const double expected = n * n / std::pow(1.0 - z.abs2(), 2);
      worst = std::max(worst, std::abs(mass.real() - expected) / expected);
    }
  }
  v.require(pts.size() == 20, "grid size");
  v.require(worst < 1e-8, "relative error " + sci(worst));
  if (v.ok) v.note = "max relative error " + sci(worst) + " over 4 orders x 20 points";
  return v;
}

Outcome reproducing_property() {
  Outcome v;
  const std::vector<ExactDiskPoint> pts{ExactDiskPoint(ComplexRational(0)), ExactDiskPoint(ComplexRational(Rational(1, 2))),
                                        ExactDiskPoint(ComplexRational(Rational(1, 4), Rational(1, 4)))};
  int count = 0;
  for (int n = 1; n <= 3; ++n) {
    const OrthonormalBasis basis(SpaceOrder(n), 10);
    for (const auto& m : ordered_monomials(SpaceOrder(n), 10 - (2 * n - 2))) {
      const Polynomial h = mono(m.p, m.q);
      for (const auto& z : pts) {
        ++count;
        if (!(basis.truncated_kernel_inner(h, z) == h.evaluate(z.value()))) {
          v.require(false, "n=" + std::to_string(n) + " h=" + h.to_string());
        }
      }
    }
  }
  if (v.ok) v.note = std::to_string(count) + " identities hold exactly";
  return v;
}

Outcome harmonic_fixed_point() {
  Outcome v;
  const Rational half(1, 2);
  const ComplexRational minus_half_i(Rational(0), Rational(-1, 2));
  // 1, Re w, Im w^2, Re w^3.
  const std::vector<Polynomial> us{Polynomial(1), (mono(1, 0) + mono(0, 1)) * ComplexRational(half),
                                   (mono(2, 0) - mono(0, 2)) * minus_half_i, (mono(3, 0) + mono(0, 3)) * ComplexRational(half)};
  double worst = 0.0;
  for (const auto& u : us) {
    const Integrand f = from(u);
    for (const auto& z : grid(0.9, 3, 6)) {
      const auto rule = rule_for_point(z.abs());
      const Complex target = u.evaluate(z.value());
      for (int a = 0; a <= 3; ++a) worst = std::max(worst, std::abs(weighted_berezin(BerezinWeight(a), f, z, rule) - target));
      for (int n = 1; n <= 3; ++n) worst = std::max(worst, std::abs(symbol_berezin(SpaceOrder(n), f, z, rule) - target));
    }
  }
  v.require(worst < 1e-8, "max error " + sci(worst));
  if (v.ok) v.note = "max error " + sci(worst);
  return v;
}

Outcome decomposition() {
  Outcome v;
  const std::vector<Polynomial> fs{mono(1, 1), mono(2, 2), mono(2, 1)};
  double worst = 0.0;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& f : fs) {
      for (const auto& z : grid(0.9, 3, 4)) {
        worst = std::max(worst, berezin_decomposition_residual(SpaceOrder(n), from(f), z, rule_for_point(z.abs())).combination);
      }
    }
  }
  const double anchor = std::abs(symbol_berezin(SpaceOrder(2), from(mono(1, 1)), DiskPoint(0.0, 0.0), default_rule()) - 0.25);
  v.require(worst < 1e-9, "residual " + sci(worst));
  v.require(anchor < 1e-10, "B(|w|^2)(0) off by " + sci(anchor));
  if (v.ok) v.note = "max residual " + sci(worst) + ", B(|w|^2)(0) - 1/4 = " + sci(anchor);
  return v;
}

Outcome recursion() {
  Outcome v;
  double worst = 0.0;
  for (const auto& u : {mono(1, 1), mono(2, 2)}) {
    for (int a = 0; a <= 2; ++a) {
      for (const auto& z : grid(0.7, 2, 4)) {
        worst = std::max(worst, berezin_decomposition_residual(SpaceOrder(1), from(u), z, default_rule(), a).recursion);
      }
    }
  }
  v.require(worst < 1e-5, "residual " + sci(worst));
  if (v.ok) v.note = "max residual " + sci(worst);
  return v;
}

Outcome witness() {
  Outcome v;
  const auto g = grid(0.7, 3, 6);
  const auto w2 = noninjectivity_witness(SpaceOrder(2), 6, g);
  const auto w1 = noninjectivity_witness(SpaceOrder(1), 6, g);
  v.require(w2.berezin_sup < 1e-8, "Berezin sup " + sci(w2.berezin_sup));
  v.require(w2.frobenius > 0.1, "Frobenius " + sci(w2.frobenius));
  v.require(w1.exactly_equal, "n=1 control differs");
  if (v.ok) v.note = "Berezin sup " + sci(w2.berezin_sup) + ", Frobenius " + sci(w2.frobenius) + ", n=1 S = R exactly";
  return v;
}

Outcome operator_identities() {
  Outcome v;
  const std::vector<Polynomial> symbols{mono(1, 0), mono(0, 2) + mono(1, 1), mono(2, 1) * ComplexRational(Rational(1, 3), Rational(2))};
  for (int n = 1; n <= 3; ++n) {
    const auto basis = make_basis(SpaceOrder(n), 8);
    for (const auto& f : symbols) {
      v.require(toeplitz_matrix(basis, f.conj()).gram() == toeplitz_matrix(basis, f).gram().conjugate_transpose(),
                "adjoint symmetry n=" + std::to_string(n));
    }
  }

  double eigen = 0.0;
  for (int n : {1, 2}) {
    eigen = std::max(eigen, antianalytic_eigen_check(SpaceOrder(n), 12, Polynomial::z(), DiskPoint(0.4, 0.0)));
    eigen = std::max(eigen, antianalytic_eigen_check(SpaceOrder(n), 12, mono(2, 0) + Polynomial(1), DiskPoint(-0.1, 0.3)));
  }
  v.require(eigen < 1e-8, "eigen-check " + sci(eigen));

  for (int n = 1; n <= 3; ++n) {
    const int cap = 10;
    const auto basis = make_basis(SpaceOrder(n), cap);
    for (const auto& [u, w] : std::vector<std::pair<Polynomial, Polynomial>>{{Polynomial::zbar(), Polynomial::z()}, {mono(1, 2), mono(2, 0) + mono(1, 0)}}) {
      const auto sc = semi_commutator(toeplitz_matrix(basis, u), toeplitz_matrix(basis, w), toeplitz_matrix(basis, u * w));
      v.require(block_is_exactly_zero(sc, interior_indices(*basis, cap - w.degree())), "interior block n=" + std::to_string(n));
    }
  }

  const std::vector<std::pair<HarmonicSymbol, HarmonicSymbol>> pairs{
      {HarmonicSymbol::coanalytic(Polynomial::z()), HarmonicSymbol::analytic(Polynomial::z())},
      {HarmonicSymbol::analytic(Polynomial::z() + Polynomial(1)), HarmonicSymbol::coanalytic(mono(2, 0))},
      {HarmonicSymbol(Polynomial::z(), Polynomial::z()), HarmonicSymbol(mono(2, 0), Polynomial::z())}};
  double diagonal = 0.0;
  for (const auto& [u, w] : pairs) {
    for (const auto& z : grid(0.5, 2, 4)) {
      diagonal = std::max(diagonal, product_formula_check(SpaceOrder(2), 22, u, w, z, z, default_rule()).diagonal);
    }
  }
  v.require(diagonal < 1e-6, "diagonal identity " + sci(diagonal));
  if (v.ok) v.note = "adjoints exact, eigen-check " + sci(eigen) + ", interior blocks exactly zero, diagonal identity " + sci(diagonal);
  return v;
}

Outcome growth_and_compactness() {
  Outcome v;
  const Polynomial u = Polynomial::zbar() + Polynomial::z();
  const Polynomial w = Polynomial::zbar() - Polynomial::z();
  std::string ranks;
  for (int n : {1, 2}) {
    int previous = -1;
    int previous_comm = -1;
    for (int cap : {4, 6, 8, 10, 12}) {
      const int r = numerical_rank(compressed_product(SpaceOrder(n), cap, u, w), 1e-8);
      v.require(r >= previous, "product rank decreased at n=" + std::to_string(n) + ", D=" + std::to_string(cap));
      previous = r;
      const auto basis = make_basis(SpaceOrder(n), cap);
      const auto c = commutator(toeplitz_matrix(basis, Polynomial::z()), toeplitz_matrix(basis, Polynomial::zbar()));
      const int rc = numerical_rank(principal_block(c.values(), interior_indices(*basis, cap - 2)), 1e-8);
      v.require(rc >= previous_comm, "commutator rank decreased at n=" + std::to_string(n));
      previous_comm = rc;
    }
    v.require(previous > 3, "product rank at D=12 is " + std::to_string(previous));
    ranks += " n=" + std::to_string(n) + ": " + std::to_string(previous) + "/" + std::to_string(previous_comm);
  }

  const Integrand bump = [](Complex x) { return Complex(1.0 - std::norm(x)); };
  for (int n = 1; n <= 3; ++n) {
    double previous = 2.0;
    for (double r : {0.5, 0.9, 0.99}) {
      const double b = symbol_berezin(SpaceOrder(n), bump, DiskPoint(r, 0.0), rule_for_point(r)).real();
      v.require(b < previous, "compactness probe not decreasing at n=" + std::to_string(n));
      previous = b;
    }
    v.require(previous < 0.1, "Bf(0.99) = " + sci(previous));
  }

  const auto t0 = std::chrono::steady_clock::now();
  int failed = 0;
  const auto results = run_suite("core");
  for (const auto& r : results) {
    if (!r.passed) {
      ++failed;
      v.require(false, "core check " + r.name + " failed: " + r.detail);
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  v.require(seconds < 300.0, "core suite took " + sci(seconds) + " s");
  if (v.ok) {
    v.note = "ranks at D=12 (product/commutator):" + ranks + "; compactness decay holds; core suite " +
             std::to_string(results.size()) + "/" + std::to_string(results.size()) + " in " + sci(seconds) + " s";
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Q ground truth for n=2", q_ground_truth},
      {"scan claim for 2 <= n <= 25, extended to 100", scan_claim},
      {"kernel norm identity by quadrature", kernel_norm_identity},
      {"exact reproducing property", reproducing_property},
      {"harmonic fixed point", harmonic_fixed_point},
      {"Berezin decomposition", decomposition},
      {"weighted recursion", recursion},
      {"non-injectivity witness", witness},
      {"operator identities", operator_identities},
      {"rank growth, compactness and core suite", growth_and_compactness},
  };
  const std::vector<double> limits{1.0, 0.0, 30.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.note = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limits[k] > 0.0 && seconds >= limits[k]) {
      v.ok = false;
      v.note += (v.note.empty() ? "" : "; ") + std::string("runtime ") + sci(seconds) + " s over the " + sci(limits[k]) + " s limit";
    }
    failures += v.ok ? 0 : 1;
    std::printf("%s criterion %zu: %s [%.2fs] %s\n", v.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), seconds, v.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
