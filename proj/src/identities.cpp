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

#include "polybergman/identities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polybergman {

namespace {

Complex quadratic_form(const ComplexMatrix& m, const std::vector<Complex>& left, const std::vector<Complex>& right) {
  const auto k = static_cast<Eigen::Index>(right.size());
  const Eigen::Map<const Eigen::VectorXcd> l(left.data(), k);
  const Eigen::Map<const Eigen::VectorXcd> r(right.data(), k);
  return l.dot(m * r);
}

}  // namespace

ProductFormulaResidual product_formula_check(SpaceOrder n, int degree_cap, const HarmonicSymbol& u,
                                             const HarmonicSymbol& v, DiskPoint z, DiskPoint w,
                                             const DiskQuadratureRule& rule) {
  const OperatorMatrix s = compressed_product(n, degree_cap, u.as_polynomial(), v.as_polynomial());
  const auto cz = s.basis().kernel_coefficients(z);
  const auto cw = s.basis().kernel_coefficients(w);

  const Polynomial gbar_h = u.g().conj() * v.f();
  const Complex zv = z.value();
  const Complex wv = w.value();
  const Complex fw = u.f().evaluate(wv);
  const Complex hw = v.f().evaluate(wv);
  const Complex kbar_z = std::conj(v.g().evaluate(zv));
  const Complex gbar_z = std::conj(u.g().evaluate(zv));

  // <conj(g) h K_z, K_w> = int conj(g) h K_z conj(K_w) dA.
  auto cross = [&](DiskPoint a, DiskPoint b) {
    if (gbar_h.is_zero()) return Complex(0.0);
    const Integrand integrand = [&](Complex x) {
      const DiskPoint p(x);
      return gbar_h.evaluate(x) * kernel_eval(n, a, p) * std::conj(kernel_eval(n, b, p));
    };
    return integrate(integrand, rule);
  };

  // <K_z, K_w> = K_z(w).
  const Complex kzw = kernel_eval(n, z, w);
  const Complex closed = (fw * hw + fw * kbar_z + gbar_z * kbar_z) * kzw + cross(z, w);
  const Complex matrix_side = quadratic_form(s.values(), cw, cz);

  ProductFormulaResidual r{};
  r.off_diagonal = std::abs(matrix_side - closed);

  const double full = kernel_norm2(n, z);
  const Complex berezin_product = operator_berezin(s, n, z).value;
  const Complex uz = u.as_polynomial().evaluate(zv);
  const Complex vz = v.as_polynomial().evaluate(zv);
  const Complex berezin_gbar_h = cross(z, z) / full;
  r.diagonal = std::abs(berezin_product - (uz * vz - gbar_z * v.f().evaluate(zv) + berezin_gbar_h));
  return r;
}

double antianalytic_eigen_check(SpaceOrder n, int degree_cap, const Polynomial& f, DiskPoint z) {
  if (!f.is_analytic()) throw std::invalid_argument("antianalytic_eigen_check: f must be analytic");
  const auto basis = make_basis(n, degree_cap);
  // T_conj(f) - conj(f(0)) I = T_conj(f - f(0)); removing the constant exactly makes the
  // constant case vanish identically.
  const ComplexRational c0 = f.coefficient(Monomial{0, 0});
  const Polynomial g = f - Polynomial(c0);
  const OperatorMatrix t = toeplitz_matrix(basis, g.conj());
  const auto c = basis->kernel_coefficients(z);
  const auto m = static_cast<Eigen::Index>(c.size());
  const Eigen::Map<const Eigen::VectorXcd> k(c.data(), m);
  const Complex fz = std::conj(g.evaluate(z.value()));
  const Eigen::VectorXcd diff = t.values() * k - fz * k;
  double num = 0.0;
  for (std::size_t i : interior_indices(*basis, degree_cap - f.degree())) num += std::norm(diff(static_cast<Eigen::Index>(i)));
  return std::sqrt(num) / k.norm();
}

WitnessResult noninjectivity_witness(SpaceOrder n, int degree_cap, const std::vector<DiskPoint>& grid) {
  if (degree_cap < 4) throw std::invalid_argument("noninjectivity_witness: degree cap must be >= 4");
  const Rational inv_n2(1, static_cast<unsigned long>(n.value()) * static_cast<unsigned long>(n.value()));
  const std::vector<Polynomial> us{Polynomial(ComplexRational(inv_n2)), Polynomial::z(), Polynomial::monomial(2, 0)};
  const std::vector<Polynomial> vs{Polynomial(1), Polynomial::monomial(0, 1, ComplexRational(-2 * inv_n2)),
                                   Polynomial::monomial(0, 2, ComplexRational(inv_n2))};

  auto build = [&](int cap) {
    std::optional<OperatorMatrix> s;
    for (std::size_t j = 0; j < us.size(); ++j) {
      OperatorMatrix term = compressed_product(n, cap, us[j], vs[j]);
      s = s ? add(*s, term) : term;
    }
    return *s;
  };

  WitnessResult out{};
  const OperatorMatrix s = build(degree_cap);
  const OperatorMatrix r = rank_one_matrix(Polynomial(1), Polynomial(1), s.basis_ptr());
  const OperatorMatrix diff = subtract(s, r);
  out.frobenius = frobenius_norm(diff);
  out.exactly_equal = diff.gram().is_zero();

  double radius = 0.0;
  for (const auto& z : grid) radius = std::max(radius, z.abs());
  const int wide = std::max(degree_cap, kernel_cap_for(n, radius, 1e-12));
  const OperatorMatrix sw = wide == degree_cap ? s : build(wide);
  const OperatorMatrix rw = rank_one_matrix(Polynomial(1), Polynomial(1), sw.basis_ptr());
  out.berezin_sup = 0.0;
  for (const auto& z : grid) {
    const Complex bs = operator_berezin(sw, n, z).value;
    const Complex br = operator_berezin(rw, n, z).value;
    out.berezin_sup = std::max(out.berezin_sup, std::abs(bs - br));
  }
  return out;
}

}  // namespace polybergman
