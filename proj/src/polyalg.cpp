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

#include "polybergman/polyalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace polybergman {

Rational monomial_inner(int p, int q, int r, int s) {
  if (p < 0 || q < 0 || r < 0 || s < 0) throw std::invalid_argument("monomial_inner: negative exponent");
  if (p + s != q + r) return Rational(0);
  return Rational(1, p + s + 1);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(ComplexRational constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{0, 0}, std::move(constant));
}

Polynomial Polynomial::monomial(int p, int q, ComplexRational coeff) {
  if (p < 0 || q < 0) throw std::invalid_argument("Polynomial::monomial: negative exponent");
  Polynomial f;
  f.add_term({p, q}, coeff);
  return f;
}

ComplexRational Polynomial::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ComplexRational() : it->second;
}

void Polynomial::add_term(Monomial m, const ComplexRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::max_q() const {
  int q = -1;
  for (const auto& [m, c] : terms_) q = std::max(q, m.q);
  return q;
}

Polynomial Polynomial::conj() const {
  Polynomial g;
  for (const auto& [m, c] : terms_) g.terms_.emplace(Monomial{m.q, m.p}, c.conj());
  return g;
}

Complex Polynomial::evaluate(Complex w) const {
  Complex sum = 0.0;
  const Complex wb = std::conj(w);
  for (const auto& [m, c] : terms_) sum += c.to_complex() * std::pow(w, m.p) * std::pow(wb, m.q);
  return sum;
}

ComplexRational Polynomial::evaluate(const ComplexRational& w) const {
  ComplexRational sum;
  const ComplexRational wb = w.conj();
  for (const auto& [m, c] : terms_) {
    sum += c * pow(w, static_cast<unsigned>(m.p)) * pow(wb, static_cast<unsigned>(m.q));
  }
  return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const ComplexRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term({ma.p + mb.p, ma.q + mb.q}, ca * cb);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.re.get_str();
    if (!c.is_real()) os << (sgn(c.im) < 0 ? "-" : "+") << Rational(abs(c.im)).get_str() << "i";
    os << ")";
    if (m.p > 0) os << "*z^" << m.p;
    if (m.q > 0) os << "*zbar^" << m.q;
  }
  return os.str();
}

PolyanalyticPolynomial::PolyanalyticPolynomial(SpaceOrder n, Polynomial body)
    : order_(n), body_(std::move(body)) {
  if (body_.max_q() >= n.value()) {
    throw std::invalid_argument("PolyanalyticPolynomial: monomial with q >= n in " + body_.to_string());
  }
}

ComplexRational inner_product(const Polynomial& f, const Polynomial& g) {
  ComplexRational sum;
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      if (mf.charge() != mg.charge()) continue;
      sum += cf * cg.conj() * monomial_inner(mf, mg);
    }
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Monomial ordering and Gram matrices

std::vector<Monomial> ordered_monomials(SpaceOrder n, int degree_cap) {
  if (degree_cap < 0) throw std::invalid_argument("ordered_monomials: negative degree cap");
  std::vector<Monomial> out;
  for (int d = 0; d <= degree_cap; ++d) {
    for (int q = 0; q < n.value() && q <= d; ++q) out.push_back({d - q, q});
  }
  return out;
}

std::vector<std::vector<Rational>> gram_matrix(const std::vector<Monomial>& monomials) {
  const std::size_t m = monomials.size();
  std::vector<std::vector<Rational>> g(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) g[i][j] = monomial_inner(monomials[j], monomials[i]);
  }
  return g;
}

std::vector<Rational> ldlt_pivots(std::vector<std::vector<Rational>> a) {
  const std::size_t m = a.size();
  std::vector<Rational> pivots(m);
  for (std::size_t k = 0; k < m; ++k) {
    pivots[k] = a[k][k];
    if (sgn(pivots[k]) == 0) {
      pivots.resize(k + 1);
      return pivots;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      if (sgn(a[i][k]) == 0) continue;
      const Rational l = a[i][k] / pivots[k];
      for (std::size_t j = k + 1; j < m; ++j) {
        if (sgn(a[k][j]) != 0) a[i][j] -= l * a[k][j];
      }
    }
  }
  return pivots;
}

// ---------------------------------------------------------------------------
// OrthonormalBasis

OrthonormalBasis::OrthonormalBasis(SpaceOrder n, int degree_cap)
    : order_(n), cap_(degree_cap), monomials_(ordered_monomials(n, degree_cap)) {
  const std::size_t m = monomials_.size();
  vectors_.resize(m);
  norms_.resize(m);
  // Vectors of different charge are orthogonal, so Gram-Schmidt only has to
  // project against earlier vectors of the same charge.
  std::unordered_map<int, std::vector<std::size_t>> by_charge;
  for (std::size_t i = 0; i < m; ++i) {
    const Monomial mi = monomials_[i];
    std::vector<Term> v{{static_cast<int>(i), Rational(1)}};
    auto& same = by_charge[mi.charge()];
    for (std::size_t j : same) {
      Rational proj = 0;  // <m_i, v_j>
      for (const auto& t : vectors_[j]) proj += t.coeff * monomial_inner(mi, monomials_[t.monomial]);
      if (sgn(proj) == 0) continue;
      const Rational factor = proj / norms_[j];
      for (const auto& t : vectors_[j]) {
        auto it = std::find_if(v.begin(), v.end(), [&](const Term& x) { return x.monomial == t.monomial; });
        if (it == v.end()) {
          v.push_back({t.monomial, -factor * t.coeff});
        } else {
          it->coeff -= factor * t.coeff;
        }
      }
    }
    std::erase_if(v, [](const Term& t) { return sgn(t.coeff) == 0; });
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
    Rational norm = 0;
    for (const auto& a : v) {
      for (const auto& b : v) norm += a.coeff * b.coeff * monomial_inner(monomials_[a.monomial], monomials_[b.monomial]);
    }
    if (sgn(norm) <= 0) throw std::logic_error("OrthonormalBasis: non-positive squared norm");
    vectors_[i] = std::move(v);
    norms_[i] = std::move(norm);
    same.push_back(i);
  }
}

Polynomial OrthonormalBasis::unnormalized(std::size_t i) const {
  Polynomial f;
  for (const auto& t : vectors_.at(i)) f.add_term(monomials_[t.monomial], ComplexRational(t.coeff));
  return f;
}

std::size_t OrthonormalBasis::prefix_size(int d) const {
  return static_cast<std::size_t>(
      std::count_if(monomials_.begin(), monomials_.end(), [d](const Monomial& m) { return m.degree() <= d; }));
}

std::vector<Complex> OrthonormalBasis::evaluate_all(Complex w) const {
  const std::size_t m = size();
  std::vector<Complex> mono(m);
  for (std::size_t k = 0; k < m; ++k) mono[k] = std::pow(w, monomials_[k].p) * std::pow(std::conj(w), monomials_[k].q);
  std::vector<Complex> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    Complex s = 0.0;
    for (const auto& t : vectors_[i]) s += t.coeff.get_d() * mono[t.monomial];
    out[i] = s / std::sqrt(norms_[i].get_d());
  }
  return out;
}

std::vector<ComplexRational> OrthonormalBasis::evaluate_unnormalized(const ComplexRational& w) const {
  const std::size_t m = size();
  std::vector<ComplexRational> mono(m);
  const ComplexRational wb = w.conj();
  for (std::size_t k = 0; k < m; ++k) {
    mono[k] = pow(w, static_cast<unsigned>(monomials_[k].p)) * pow(wb, static_cast<unsigned>(monomials_[k].q));
  }
  std::vector<ComplexRational> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& t : vectors_[i]) out[i] += mono[t.monomial] * t.coeff;
  }
  return out;
}

std::vector<Complex> OrthonormalBasis::kernel_coefficients(DiskPoint z) const {
  auto e = evaluate_all(z.value());
  for (auto& v : e) v = std::conj(v);
  return e;
}

double OrthonormalBasis::kernel_mass(DiskPoint z) const {
  double s = 0.0;
  for (const auto& v : evaluate_all(z.value())) s += std::norm(v);
  return s / kernel_norm2(order_, z);
}

ComplexRational OrthonormalBasis::truncated_kernel_inner(const Polynomial& h, const ExactDiskPoint& z) const {
  const auto vz = evaluate_unnormalized(z.value());
  ComplexRational sum;
  for (std::size_t i = 0; i < size(); ++i) {
    const ComplexRational c = inner_product(h, unnormalized(i));
    if (c.is_zero()) continue;
    sum += vz[i] * c / norms_[i];
  }
  return sum;
}

ComplexRational OrthonormalBasis::truncated_kernel_exact(const ExactDiskPoint& z, const ExactDiskPoint& w) const {
  const auto vz = evaluate_unnormalized(z.value());
  const auto vw = evaluate_unnormalized(w.value());
  ComplexRational sum;
  for (std::size_t i = 0; i < size(); ++i) sum += vz[i].conj() * vw[i] / norms_[i];
  return sum;
}

int kernel_cap_for(SpaceOrder n, double radius, double tol, int max_cap) {
  if (!(radius >= 0.0 && radius < 1.0)) throw std::invalid_argument("kernel_cap_for: radius outside [0, 1)");
  if (radius == 0.0) return 2 * (n.value() - 1);
  const DiskPoint z(radius, 0.0);
  const double full = kernel_norm2(n, z);
  for (int cap = 16;; cap *= 2) {
    const int c = std::min(cap, max_cap);
    OrthonormalBasis basis(n, c);
    const auto e = basis.evaluate_all(z.value());
    double partial = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      partial += std::norm(e[i]);
      const bool last_of_degree = i + 1 == basis.size() || basis.degree(i + 1) != basis.degree(i);
      if (last_of_degree && partial >= (1.0 - tol) * full) return basis.degree(i);
    }
    if (c == max_cap) throw std::runtime_error("kernel_cap_for: tolerance not reached below max_cap");
  }
}

}  // namespace polybergman
