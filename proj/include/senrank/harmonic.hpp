/*
 * Copyright 2026 The senrank Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "senrank/error.hpp"
#include "senrank/similarity.hpp"

#include <Eigen/Core>

#include <vector>

namespace senrank {

// -----------------------------------------------------------------------------
// Expression-level kernels. These work for any dense Eigen scalar type.
// -----------------------------------------------------------------------------

/// Combinatorial Laplacian D - W, D the diagonal of row sums of W.
template <typename Derived>
typename Derived::PlainObject laplacian_matrix(const Eigen::MatrixBase<Derived>& w) {
  typename Derived::PlainObject delta = -w;
  delta.diagonal() += w.rowwise().sum();
  return delta;
}

/// sum_i sum_j w(i, j) (f_i - f_j)^2, both orderings of every pair included.
template <typename DerivedF, typename DerivedW>
typename DerivedW::Scalar energy_sum(const Eigen::MatrixBase<DerivedF>& f,
                                     const Eigen::MatrixBase<DerivedW>& w) {
  using Scalar = typename DerivedW::Scalar;
  Scalar total(0);
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      const Scalar diff = f(i) - f(j);
      total += w(i, j) * diff * diff;
    }
  }
  return total;
}

/// f^T L f.
template <typename DerivedF, typename DerivedL>
typename DerivedL::Scalar quadratic_form(const Eigen::MatrixBase<DerivedF>& f,
                                         const Eigen::MatrixBase<DerivedL>& lap) {
  return f.dot(lap * f);
}

// -----------------------------------------------------------------------------
// Domain types
// -----------------------------------------------------------------------------

class Laplacian {
 public:
  Laplacian() = default;
  explicit Laplacian(Eigen::MatrixXd delta) : delta_(std::move(delta)) {}

  const Eigen::MatrixXd& matrix() const noexcept { return delta_; }
  Eigen::Index size() const noexcept { return delta_.rows(); }

 private:
  Eigen::MatrixXd delta_;
};

struct Anchor {
  Eigen::Index index;
  double score;

  friend bool operator==(const Anchor&, const Anchor&) = default;
};

/// Members whose scores are held fixed. Sorted by index.
///
/// Requires at least two entries with distinct nonnegative indices, every score in
/// [-1, +1], and at least one strictly positive and one strictly negative score.
class AnchorSet {
 public:
  explicit AnchorSet(std::vector<Anchor> entries);

  const std::vector<Anchor>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool contains(Eigen::Index index) const;

  /// Throws InvalidAnchorError if any index falls outside [0, n).
  void check_bounds(Eigen::Index n) const;

  friend bool operator==(const AnchorSet&, const AnchorSet&) = default;

 private:
  std::vector<Anchor> entries_;
};

struct ScoreVector {
  Eigen::VectorXd f;
  std::vector<bool> labeled;
};

/// Blocks of the Laplacian after moving anchored rows/columns aside.
struct LaplacianPartition {
  Eigen::MatrixXd uu;                    ///< unlabeled x unlabeled
  Eigen::MatrixXd ul;                    ///< unlabeled x labeled
  Eigen::VectorXd f_labeled;             ///< anchor scores, in `labeled` order
  std::vector<Eigen::Index> unlabeled;   ///< original indices, ascending
  std::vector<Eigen::Index> labeled;     ///< original indices, ascending
};

// -----------------------------------------------------------------------------
// Operations
// -----------------------------------------------------------------------------

Laplacian laplacian(const WeightMatrix& w);

/// Throws DimensionError when f and w disagree in size.
double energy(const Eigen::VectorXd& f, const WeightMatrix& w);

LaplacianPartition partition(const Laplacian& lap, const AnchorSet& anchors);

/// Minimizes the energy with anchors held fixed: solves uu * f_U = -ul * f_L with a
/// Cholesky factorization, falling back to full-pivot LU when Cholesky reports a
/// non-positive pivot. Throws SingularSystemError if neither factorization is usable.
ScoreVector solve_harmonic(const Laplacian& lap, const AnchorSet& anchors);

/// Infinity norm of uu * f_U + ul * f_L at `scores`.
double stationarity_residual(const LaplacianPartition& parts, const ScoreVector& scores);

}  // namespace senrank
