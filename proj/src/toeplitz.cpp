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

#include "polybergman/toeplitz.hpp"

#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>

namespace polybergman {

std::shared_ptr<const OrthonormalBasis> make_basis(SpaceOrder n, int degree_cap) {
  return std::make_shared<const OrthonormalBasis>(n, degree_cap);
}

namespace {

// <f v_j, v_i>, skipping charge combinations that cannot meet.
ComplexRational toeplitz_entry(const OrthonormalBasis& basis, const Polynomial& symbol, std::size_t i, std::size_t j) {
  const auto& mons = basis.monomials();
  ComplexRational sum;
  for (const auto& [mt, ct] : symbol.terms()) {
    if (basis.charge(j) + mt.charge() != basis.charge(i)) continue;
    for (const auto& a : basis.terms(j)) {
      const Monomial prod{mt.p + mons[a.monomial].p, mt.q + mons[a.monomial].q};
      for (const auto& b : basis.terms(i)) {
        const Rational ip = monomial_inner(prod, mons[b.monomial]);
        if (sgn(ip) == 0) continue;
        sum += ct * (a.coeff * b.coeff * ip);
      }
    }
  }
  return sum;
}

std::set<int> symbol_charges(const Polynomial& symbol) {
  std::set<int> charges;
  for (const auto& [m, c] : symbol.terms()) charges.insert(m.charge());
  return charges;
}

}  // namespace

OperatorMatrix toeplitz_matrix_serial(std::shared_ptr<const OrthonormalBasis> basis, const Polynomial& symbol) {
  const std::size_t m = basis->size();
  const auto charges = symbol_charges(symbol);
  ExactMatrix g(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (charges.count(basis->charge(i) - basis->charge(j)) == 0) continue;
      g(i, j) = toeplitz_entry(*basis, symbol, i, j);
    }
  }
  return OperatorMatrix(std::move(basis), std::move(g), Provenance::exact);
}

OperatorMatrix toeplitz_matrix(std::shared_ptr<const OrthonormalBasis> basis, const Polynomial& symbol) {
  const std::size_t m = basis->size();
  const auto charges = symbol_charges(symbol);
  ExactMatrix g(m);
  const auto rows = static_cast<long>(m);
#pragma omp parallel for schedule(dynamic)
  for (long ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < m; ++j) {
      if (charges.count(basis->charge(i) - basis->charge(j)) == 0) continue;
      g(i, j) = toeplitz_entry(*basis, symbol, i, j);
    }
  }
  return OperatorMatrix(std::move(basis), std::move(g), Provenance::exact);
}

OperatorMatrix toeplitz_matrix(SpaceOrder n, int degree_cap, const Polynomial& symbol) {
  return toeplitz_matrix(make_basis(n, degree_cap), symbol);
}

OperatorMatrix toeplitz_matrix_quadrature(std::shared_ptr<const OrthonormalBasis> basis, const Integrand& symbol,
                                          const DiskQuadratureRule& rule) {
  const auto m = static_cast<Eigen::Index>(basis->size());
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  // Rows of E hold e_i at each node; M = E^* diag(w f) E transposed into <f e_j, e_i>.
  ComplexMatrix e(static_cast<Eigen::Index>(nodes.size()), m);
  Eigen::VectorXcd wf(static_cast<Eigen::Index>(nodes.size()));
  const auto count = static_cast<long>(nodes.size());
  std::optional<QuadratureError> failure;
#pragma omp parallel for schedule(static)
  for (long k = 0; k < count; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    const auto vals = basis->evaluate_all(nodes[ks]);
    for (Eigen::Index i = 0; i < m; ++i) e(k, i) = vals[static_cast<std::size_t>(i)];
    try {
      const Complex f = symbol(nodes[ks]);
      if (!std::isfinite(f.real()) || !std::isfinite(f.imag())) throw std::runtime_error("non-finite symbol value");
      wf(k) = weights[ks] * f;
    } catch (const std::exception& ex) {
#pragma omp critical(polybergman_toeplitz_quadrature)
      if (!failure || failure->node_index() > ks) failure = QuadratureError(ks, nodes[ks], ex.what());
    }
  }
  if (failure) throw *failure;
  ComplexMatrix values = e.adjoint() * wf.asDiagonal() * e;
  return OperatorMatrix(std::move(basis), std::move(values), Provenance::quadrature);
}

OperatorMatrix rank_one_matrix(const Polynomial& x, const Polynomial& y, std::shared_ptr<const OrthonormalBasis> basis) {
  const int n = basis->order().value();
  for (const Polynomial* p : {&x, &y}) {
    if (p->degree() > basis->degree_cap()) throw std::invalid_argument("rank_one_matrix: degree exceeds basis cap");
    if (p->max_q() >= n) throw std::invalid_argument("rank_one_matrix: vector is not n-analytic");
  }
  const std::size_t m = basis->size();
  std::vector<ComplexRational> xi(m);
  std::vector<ComplexRational> yj(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Polynomial v = basis->unnormalized(i);
    xi[i] = inner_product(x, v);  // <x, v_i>
    yj[i] = inner_product(v, y);  // <v_j, y>
  }
  ExactMatrix g(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (xi[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (!yj[j].is_zero()) g(i, j) = yj[j] * xi[i];
    }
  }
  return OperatorMatrix(std::move(basis), std::move(g), Provenance::exact);
}

HarmonicSymbol::HarmonicSymbol(Polynomial analytic, Polynomial coanalytic_conjugate)
    : f_(std::move(analytic)), g_(std::move(coanalytic_conjugate)) {
  if (!f_.is_analytic() || !g_.is_analytic()) {
    throw std::invalid_argument("HarmonicSymbol: both parts must be analytic polynomials");
  }
}

OperatorMatrix compressed_product(SpaceOrder n, int degree_cap, const Polynomial& u, const Polynomial& v) {
  const auto wide = make_basis(n, degree_cap + u.degree() + v.degree());
  const auto product = multiply(toeplitz_matrix(wide, u), toeplitz_matrix(wide, v));
  return product.restrict_to_cap(degree_cap);
}

}  // namespace polybergman
