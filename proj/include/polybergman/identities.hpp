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

#include "polybergman/berezin.hpp"
#include "polybergman/toeplitz.hpp"

namespace polybergman {

struct ProductFormulaResidual {
  /// |<T_u T_v K_z, K_w> - closed form| with truncated kernels on the matrix side.
  double off_diagonal;
  /// |B(T_u T_v)(z) - (u(z)v(z) - conj(g(z))h(z) + B(T_{conj(g)h})(z))|.
  double diagonal;
};

/// Checks the kernel formula for <T_u T_v K_z, K_w> with u = f + conj(g), v = h + conj(k),
/// and the Berezin product formula on the diagonal. The matrix side uses P_D T_u T_v P_D;
/// the closed-form term <conj(g) h K_z, K_w> is integrated with `rule`.
ProductFormulaResidual product_formula_check(SpaceOrder n, int degree_cap, const HarmonicSymbol& u,
                                             const HarmonicSymbol& v, DiskPoint z, DiskPoint w,
                                             const DiskQuadratureRule& rule);

/// |T_{conj f} K - conj(f(z)) K| / |K| over the basis vectors of degree <= D - deg f,
/// with K the truncated kernel at z.
double antianalytic_eigen_check(SpaceOrder n, int degree_cap, const Polynomial& f, DiskPoint z);

struct WitnessResult {
  /// max over the grid of |B(S)(z) - B(R)(z)|.
  double berezin_sup;
  /// Frobenius norm of S - R at the requested cap.
  double frobenius;
  /// S == R in exact arithmetic at the requested cap.
  bool exactly_equal;
};

/// S = sum_j T_{u_j} T_{v_j} for u = (1/n^2, w, w^2), v = (1, -2 conj(w)/n^2, conj(w)^2/n^2),
/// whose symbol sum is (1 - conj(z) w)^2 / n^2, against R = 1 (x) 1. The Berezin
/// comparison runs at a cap large enough for the grid that kernel truncation is negligible.
/// Throws std::invalid_argument for D < 4.
WitnessResult noninjectivity_witness(SpaceOrder n, int degree_cap, const std::vector<DiskPoint>& grid);

}  // namespace polybergman
