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

#include <memory>

#include "polybergman/diskquad.hpp"
#include "polybergman/operator_matrix.hpp"
#include "polybergman/polyalg.hpp"

namespace polybergman {

/// Shared immutable basis for (n, D).
std::shared_ptr<const OrthonormalBasis> make_basis(SpaceOrder n, int degree_cap);

/// Truncated Toeplitz matrix M_ij = <f e_j, e_i> with exact entries. The symbol may
/// contain any power of conj(z); it acts as a multiplier. Rows are built in parallel.
OperatorMatrix toeplitz_matrix(std::shared_ptr<const OrthonormalBasis> basis, const Polynomial& symbol);
OperatorMatrix toeplitz_matrix(SpaceOrder n, int degree_cap, const Polynomial& symbol);

/// Single-threaded reference for toeplitz_matrix.
OperatorMatrix toeplitz_matrix_serial(std::shared_ptr<const OrthonormalBasis> basis, const Polynomial& symbol);

/// Toeplitz matrix of a callable symbol by quadrature (provenance = quadrature).
OperatorMatrix toeplitz_matrix_quadrature(std::shared_ptr<const OrthonormalBasis> basis, const Integrand& symbol,
                                          const DiskQuadratureRule& rule);

/// Matrix of x (x) y : h -> <h, y> x. x and y must lie in the span of the basis
/// (n-analytic of degree <= D); throws std::invalid_argument otherwise.
OperatorMatrix rank_one_matrix(const Polynomial& x, const Polynomial& y, std::shared_ptr<const OrthonormalBasis> basis);

/// u = f + conj(g) with f, g analytic polynomials.
class HarmonicSymbol {
 public:
  /// Throws std::invalid_argument unless both parts are analytic.
  HarmonicSymbol(Polynomial analytic, Polynomial coanalytic_conjugate);

  static HarmonicSymbol analytic(Polynomial f) { return {std::move(f), Polynomial()}; }
  /// The co-analytic function conj(g), given g.
  static HarmonicSymbol coanalytic(Polynomial g) { return {Polynomial(), std::move(g)}; }

  const Polynomial& f() const { return f_; }
  const Polynomial& g() const { return g_; }
  /// f + conj(g) as a polynomial in z, conj(z).
  Polynomial as_polynomial() const { return f_ + g_.conj(); }
  int degree() const { return std::max(f_.degree(), g_.degree()); }

 private:
  Polynomial f_;
  Polynomial g_;
};

/// P_D T_u T_v P_D for polynomial symbols, computed exactly: the factors are built on
/// the cap D + deg(u) + deg(v), where truncation does not touch the product, and the
/// product is restricted back to cap D.
OperatorMatrix compressed_product(SpaceOrder n, int degree_cap, const Polynomial& u, const Polynomial& v);

}  // namespace polybergman
