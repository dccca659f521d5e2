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

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "polybergman/diskgeom.hpp"
#include "polybergman/rational.hpp"

namespace polybergman {

/// The monomial z^p conj(z)^q.
struct Monomial {
  int p = 0;
  int q = 0;

  int degree() const { return p + q; }
  /// p - q; monomials of different charge are orthogonal in L^2(dA).
  int charge() const { return p - q; }
  auto operator<=>(const Monomial&) const = default;
};

/// <z^p zbar^q, z^r zbar^s> in L^2(D, dA): 1/(p+s+1) when p+s = q+r, else 0.
Rational monomial_inner(int p, int q, int r, int s);
inline Rational monomial_inner(Monomial a, Monomial b) { return monomial_inner(a.p, a.q, b.p, b.q); }

/// Finite sum of monomials z^p zbar^q with exact complex rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(ComplexRational constant);  // NOLINT(implicit)
  Polynomial(long constant) : Polynomial(ComplexRational(constant)) {}  // NOLINT(implicit)

  static Polynomial monomial(int p, int q, ComplexRational coeff = ComplexRational(1));
  /// The coordinate function z.
  static Polynomial z() { return monomial(1, 0); }
  /// The coordinate function conj(z).
  static Polynomial zbar() { return monomial(0, 1); }

  const std::map<Monomial, ComplexRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ComplexRational coefficient(Monomial m) const;

  void add_term(Monomial m, const ComplexRational& c);

  /// Largest total degree p+q (0 for the zero polynomial).
  int degree() const;
  /// Largest exponent of conj(z) (-1 for the zero polynomial).
  int max_q() const;
  bool is_analytic() const { return max_q() <= 0; }

  /// Pointwise complex conjugate: c z^p zbar^q -> conj(c) z^q zbar^p.
  Polynomial conj() const;

  Complex evaluate(Complex w) const;
  ComplexRational evaluate(const ComplexRational& w) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const ComplexRational& s);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const ComplexRational& s) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<Monomial, ComplexRational> terms_;
};

/// Polynomial of A^2_n: every stored monomial has q <= n - 1.
class PolyanalyticPolynomial {
 public:
  /// Throws std::invalid_argument if some monomial violates q < n.
  PolyanalyticPolynomial(SpaceOrder n, Polynomial body);

  SpaceOrder order() const { return order_; }
  const Polynomial& polynomial() const { return body_; }
  Complex evaluate(DiskPoint w) const { return body_.evaluate(w.value()); }

 private:
  SpaceOrder order_;
  Polynomial body_;
};

/// Exact L^2(dA) inner product, conjugate-linear in g.
ComplexRational inner_product(const Polynomial& f, const Polynomial& g);

/// Sum of coefficient(p,q) w^p conj(w)^q.
inline Complex evaluate(const Polynomial& f, DiskPoint w) { return f.evaluate(w.value()); }

/// Monomials z^p zbar^q with p+q <= D and q < n, ordered by total degree, then q, then p.
std::vector<Monomial> ordered_monomials(SpaceOrder n, int degree_cap);

/// Exact Gram matrix of a monomial list.
std::vector<std::vector<Rational>> gram_matrix(const std::vector<Monomial>& monomials);

/// Pivots of the exact LDL^T factorization; all positive iff the matrix is positive definite.
std::vector<Rational> ldlt_pivots(std::vector<std::vector<Rational>> matrix);

/// Orthogonal basis of the n-analytic polynomials of degree <= D, built by exact
/// Gram-Schmidt over ordered_monomials(). Vectors are kept unnormalized with exact
/// squared norms; normalization happens only when evaluating in floating point.
class OrthonormalBasis {
 public:
  struct Term {
    int monomial;  // index into monomials()
    Rational coeff;
  };

  OrthonormalBasis(SpaceOrder n, int degree_cap);

  SpaceOrder order() const { return order_; }
  int degree_cap() const { return cap_; }
  std::size_t size() const { return monomials_.size(); }

  const std::vector<Monomial>& monomials() const { return monomials_; }
  /// Leading monomial of the i-th vector.
  const Monomial& monomial(std::size_t i) const { return monomials_[i]; }
  int degree(std::size_t i) const { return monomials_[i].degree(); }
  int charge(std::size_t i) const { return monomials_[i].charge(); }

  /// Sparse coefficients of the unnormalized vector v_i (real rationals).
  const std::vector<Term>& terms(std::size_t i) const { return vectors_[i]; }
  const Rational& squared_norm(std::size_t i) const { return norms_[i]; }
  Polynomial unnormalized(std::size_t i) const;

  /// Number of leading vectors of degree <= d (the basis of a smaller cap is a prefix).
  std::size_t prefix_size(int d) const;

  /// e_i(w) = v_i(w) / sqrt(|v_i|^2) for all i.
  std::vector<Complex> evaluate_all(Complex w) const;
  /// v_i(w) exactly for all i.
  std::vector<ComplexRational> evaluate_unnormalized(const ComplexRational& w) const;

  /// Coefficients conj(e_i(z)) of the truncated kernel K_z^{(D)} = sum_i conj(e_i(z)) e_i.
  std::vector<Complex> kernel_coefficients(DiskPoint z) const;
  /// ||K_z^{(D)}||^2 / ||K_z||^2.
  double kernel_mass(DiskPoint z) const;
  /// <h, K_z^{(D)}> = sum_i v_i(z) <h, v_i> / |v_i|^2 in exact arithmetic.
  ComplexRational truncated_kernel_inner(const Polynomial& h, const ExactDiskPoint& z) const;
  /// K_z^{(D)}(w) = sum_i conj(e_i(z)) e_i(w), exact.
  ComplexRational truncated_kernel_exact(const ExactDiskPoint& z, const ExactDiskPoint& w) const;

 private:
  SpaceOrder order_;
  int cap_;
  std::vector<Monomial> monomials_;
  std::vector<std::vector<Term>> vectors_;
  std::vector<Rational> norms_;
};

/// Smallest degree cap whose truncated kernel carries at least 1 - tol of ||K_z||^2
/// for every |z| <= radius.
int kernel_cap_for(SpaceOrder n, double radius, double tol, int max_cap = 400);

}  // namespace polybergman
