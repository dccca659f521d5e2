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

#include <vector>

#include "polybergman/diskquad.hpp"
#include "polybergman/operator_matrix.hpp"

namespace polybergman {

/// Weight alpha >= 0 of B_alpha.
class BerezinWeight {
 public:
  explicit BerezinWeight(double alpha);
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

/// Floating coefficients of mu_n(t), ascending, from the exact construction.
std::vector<double> mu_coefficients_double(SpaceOrder n);

/// B_alpha u(z) = (alpha+1) int u(phi_z(w)) (1-|w|^2)^alpha dA(w).
Complex weighted_berezin(BerezinWeight alpha, const Integrand& u, DiskPoint z, const DiskQuadratureRule& rule);

/// Bf(z) = int f(phi_z(zeta)) mu_n(|zeta|^2) dA(zeta).
Complex symbol_berezin(SpaceOrder n, const Integrand& f, DiskPoint z, const DiskQuadratureRule& rule);

struct OperatorBerezinValue {
  /// <T K, K> / ||K||^2 with the truncated kernel K = K_z^{(D)}.
  Complex value;
  /// ||K_z^{(D)}||^2 / ||K_z||^2.
  double mass;
  /// <T K, K> / ||K_z||^2, normalized by the exact kernel norm.
  Complex mass_corrected;
};

/// Berezin transform of a truncated operator. Throws std::invalid_argument when n does
/// not match the matrix basis.
OperatorBerezinValue operator_berezin(const OperatorMatrix& t, SpaceOrder n, DiskPoint z);

/// <T K_z^{(D)}, K_w^{(D)}> for a truncated operator.
Complex operator_kernel_form(const OperatorMatrix& t, DiskPoint z, DiskPoint w);

/// (1-|z|^2)^2 times the 5-point Laplacian of g with one Richardson step (error O(h^4)).
/// Throws std::invalid_argument unless 0 < h < (1-|z|)/4.
Complex invariant_laplacian(const Integrand& g, DiskPoint z, double h);

struct DecompositionResidual {
  /// |Bf(z) - sum_k b_k/(k+1) B_k f(z)|.
  double combination;
  /// |Lap~(B_alpha f)(z) - 4(alpha+1)(alpha+2)(B_alpha f(z) - B_{alpha+1} f(z))|.
  double recursion;
};

DecompositionResidual berezin_decomposition_residual(SpaceOrder n, const Integrand& f, DiskPoint z,
                                                     const DiskQuadratureRule& rule, double alpha = 0.0,
                                                     double step = 1e-2);

}  // namespace polybergman
