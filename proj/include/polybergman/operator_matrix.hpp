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
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "polybergman/polyalg.hpp"
#include "polybergman/rational.hpp"

namespace polybergman {

using ComplexMatrix = Eigen::MatrixXcd;

/// Dense square matrix of exact complex rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  ComplexRational& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const ComplexRational& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  bool is_zero() const;
  ExactMatrix conjugate_transpose() const;
  /// Leading k x k block.
  ExactMatrix leading_block(std::size_t k) const;
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }
  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);

 private:
  std::size_t dim_ = 0;
  std::vector<ComplexRational> data_;
};

enum class Provenance { exact, quadrature, composite };

/// A truncated operator over an OrthonormalBasis.
///
/// Exact matrices are stored in Gram form G_ij = <T v_j, v_i> over the unnormalized
/// basis vectors v_i, so that every entry stays rational; the orthonormal-basis
/// entries are G_ij / sqrt(|v_i|^2 |v_j|^2). Floating matrices (quadrature-built
/// ones) only carry the orthonormal-basis entries.
class OperatorMatrix {
 public:
  OperatorMatrix(std::shared_ptr<const OrthonormalBasis> basis, ExactMatrix gram, Provenance provenance);
  OperatorMatrix(std::shared_ptr<const OrthonormalBasis> basis, ComplexMatrix values, Provenance provenance);

  static OperatorMatrix identity(std::shared_ptr<const OrthonormalBasis> basis);

  const OrthonormalBasis& basis() const { return *basis_; }
  const std::shared_ptr<const OrthonormalBasis>& basis_ptr() const { return basis_; }
  SpaceOrder order() const { return basis_->order(); }
  std::size_t dim() const { return basis_->size(); }
  Provenance provenance() const { return provenance_; }

  bool is_exact() const { return gram_.has_value(); }
  /// Throws std::logic_error for floating matrices.
  const ExactMatrix& gram() const;
  /// Entries over the orthonormal basis e_i.
  const ComplexMatrix& values() const { return values_; }

  /// Restriction to the span of the basis vectors of degree <= d (nested cap).
  OperatorMatrix restrict_to_cap(int d) const;

 private:
  std::shared_ptr<const OrthonormalBasis> basis_;
  Provenance provenance_;
  std::optional<ExactMatrix> gram_;
  ComplexMatrix values_;
};

/// Orthonormal-basis entries from Gram-form entries.
ComplexMatrix gram_to_values(const ExactMatrix& gram, const OrthonormalBasis& basis);

/// Product AB of truncated matrices. Throws std::invalid_argument on basis mismatch.
OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix add(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix subtract(const OperatorMatrix& a, const OperatorMatrix& b);

/// AB - BA.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);
/// AB - C, where C is the Toeplitz matrix of the product symbol.
OperatorMatrix semi_commutator(const OperatorMatrix& a, const OperatorMatrix& b, const OperatorMatrix& ab_symbol);

/// Frobenius norm of the orthonormal-basis entries.
double frobenius_norm(const OperatorMatrix& m);

/// Number of singular values above tol * sigma_max. Throws on an empty matrix.
int numerical_rank(const ComplexMatrix& m, double tol);
inline int numerical_rank(const OperatorMatrix& m, double tol) { return numerical_rank(m.values(), tol); }

/// Indices of basis vectors of degree <= d.
std::vector<std::size_t> interior_indices(const OrthonormalBasis& basis, int max_degree);

/// Principal submatrix on the given indices.
ComplexMatrix principal_block(const ComplexMatrix& m, const std::vector<std::size_t>& indices);

/// True when every Gram entry with row and column in `indices` is exactly zero.
bool block_is_exactly_zero(const OperatorMatrix& m, const std::vector<std::size_t>& indices);

}  // namespace polybergman
