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

#include "polybergman/operator_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace polybergman {

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

ExactMatrix ExactMatrix::conjugate_transpose() const {
  ExactMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j).conj();
  }
  return t;
}

ExactMatrix ExactMatrix::leading_block(std::size_t k) const {
  if (k > dim_) throw std::invalid_argument("leading_block: block larger than matrix");
  ExactMatrix b(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) b(i, j) = (*this)(i, j);
  }
  return b;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("ExactMatrix: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("ExactMatrix: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ComplexMatrix gram_to_values(const ExactMatrix& gram, const OrthonormalBasis& basis) {
  const std::size_t m = gram.dim();
  std::vector<double> scale(m);
  for (std::size_t i = 0; i < m; ++i) scale[i] = 1.0 / std::sqrt(basis.squared_norm(i).get_d());
  ComplexMatrix v(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto& g = gram(i, j);
      v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          g.is_zero() ? Complex(0.0) : g.to_complex() * (scale[i] * scale[j]);
    }
  }
  return v;
}

OperatorMatrix::OperatorMatrix(std::shared_ptr<const OrthonormalBasis> basis, ExactMatrix gram, Provenance provenance)
    : basis_(std::move(basis)), provenance_(provenance) {
  if (!basis_) throw std::invalid_argument("OperatorMatrix: null basis");
  if (gram.dim() != basis_->size()) throw std::invalid_argument("OperatorMatrix: dimension does not match basis");
  values_ = gram_to_values(gram, *basis_);
  gram_ = std::move(gram);
}

OperatorMatrix::OperatorMatrix(std::shared_ptr<const OrthonormalBasis> basis, ComplexMatrix values,
                               Provenance provenance)
    : basis_(std::move(basis)), provenance_(provenance), values_(std::move(values)) {
  if (!basis_) throw std::invalid_argument("OperatorMatrix: null basis");
  const auto m = static_cast<Eigen::Index>(basis_->size());
  if (values_.rows() != m || values_.cols() != m) {
    throw std::invalid_argument("OperatorMatrix: dimension does not match basis");
  }
}

OperatorMatrix OperatorMatrix::identity(std::shared_ptr<const OrthonormalBasis> basis) {
  ExactMatrix g(basis->size());
  for (std::size_t i = 0; i < basis->size(); ++i) g(i, i) = ComplexRational(basis->squared_norm(i));
  return OperatorMatrix(std::move(basis), std::move(g), Provenance::exact);
}

const ExactMatrix& OperatorMatrix::gram() const {
  if (!gram_) throw std::logic_error("OperatorMatrix: no exact entries for a floating matrix");
  return *gram_;
}

OperatorMatrix OperatorMatrix::restrict_to_cap(int d) const {
  if (d > basis_->degree_cap()) throw std::invalid_argument("restrict_to_cap: cap exceeds basis cap");
  auto small = std::make_shared<const OrthonormalBasis>(basis_->order(), d);
  const std::size_t k = small->size();
  if (gram_) return OperatorMatrix(small, gram_->leading_block(k), provenance_);
  const auto ki = static_cast<Eigen::Index>(k);
  return OperatorMatrix(small, ComplexMatrix(values_.topLeftCorner(ki, ki)), provenance_);
}

namespace {

void require_same_basis(const OperatorMatrix& a, const OperatorMatrix& b) {
  const auto& x = a.basis();
  const auto& y = b.basis();
  if (&x != &y && (x.order().value() != y.order().value() || x.degree_cap() != y.degree_cap())) {
    throw std::invalid_argument("operator matrices are over different bases");
  }
}

// G_AB = G_A N^{-1} G_B where N = diag(|v_k|^2).
ExactMatrix gram_product(const ExactMatrix& a, const ExactMatrix& b, const OrthonormalBasis& basis) {
  const std::size_t m = a.dim();
  ExactMatrix c(m);
  std::vector<std::vector<std::size_t>> row_nonzero(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!b(k, j).is_zero()) row_nonzero[k].push_back(j);
    }
  }
  const auto count = static_cast<long>(m);
#pragma omp parallel for schedule(dynamic)
  for (long ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < m; ++k) {
      if (a(i, k).is_zero() || row_nonzero[k].empty()) continue;
      const ComplexRational aik = a(i, k) / basis.squared_norm(k);
      for (std::size_t j : row_nonzero[k]) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Provenance combine(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.provenance() == Provenance::quadrature || b.provenance() == Provenance::quadrature) {
    return Provenance::quadrature;
  }
  return Provenance::composite;
}

}  // namespace

OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_basis(a, b);
  if (a.is_exact() && b.is_exact()) {
    return OperatorMatrix(a.basis_ptr(), gram_product(a.gram(), b.gram(), a.basis()), Provenance::composite);
  }
  return OperatorMatrix(a.basis_ptr(), ComplexMatrix(a.values() * b.values()), combine(a, b));
}

OperatorMatrix add(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_basis(a, b);
  if (a.is_exact() && b.is_exact()) {
    ExactMatrix g = a.gram();
    g += b.gram();
    return OperatorMatrix(a.basis_ptr(), std::move(g), Provenance::composite);
  }
  return OperatorMatrix(a.basis_ptr(), ComplexMatrix(a.values() + b.values()), combine(a, b));
}

OperatorMatrix subtract(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_basis(a, b);
  if (a.is_exact() && b.is_exact()) {
    ExactMatrix g = a.gram();
    g -= b.gram();
    return OperatorMatrix(a.basis_ptr(), std::move(g), Provenance::composite);
  }
  return OperatorMatrix(a.basis_ptr(), ComplexMatrix(a.values() - b.values()), combine(a, b));
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return subtract(multiply(a, b), multiply(b, a));
}

OperatorMatrix semi_commutator(const OperatorMatrix& a, const OperatorMatrix& b, const OperatorMatrix& ab_symbol) {
  return subtract(multiply(a, b), ab_symbol);
}

double frobenius_norm(const OperatorMatrix& m) { return m.values().norm(); }

int numerical_rank(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) throw std::invalid_argument("numerical_rank: empty matrix");
  if (!(tol > 0.0)) throw std::invalid_argument("numerical_rank: tolerance must be positive");
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  if (smax == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol * smax) ++rank;
  }
  return rank;
}

std::vector<std::size_t> interior_indices(const OrthonormalBasis& basis, int max_degree) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis.degree(i) <= max_degree) idx.push_back(i);
  }
  return idx;
}

ComplexMatrix principal_block(const ComplexMatrix& m, const std::vector<std::size_t>& indices) {
  const auto k = static_cast<Eigen::Index>(indices.size());
  ComplexMatrix b(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      b(i, j) = m(static_cast<Eigen::Index>(indices[static_cast<std::size_t>(i)]),
                  static_cast<Eigen::Index>(indices[static_cast<std::size_t>(j)]));
    }
  }
  return b;
}

bool block_is_exactly_zero(const OperatorMatrix& m, const std::vector<std::size_t>& indices) {
  const auto& g = m.gram();
  for (std::size_t i : indices) {
    for (std::size_t j : indices) {
      if (!g(i, j).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace polybergman
