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
#include "senrank/ingest.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace senrank {

/// Symmetric, nonnegative, hollow similarity matrix over the members of a roster.
///
/// Matrices built from votes have every off-diagonal entry in (0, 1]. The constructor
/// only enforces the structural part (square, finite, symmetric, nonnegative, zero
/// diagonal) so that hand-built graphs with missing edges or rescaled weights can be
/// fed to the solver as well.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(Eigen::MatrixXd w);

  const Eigen::MatrixXd& matrix() const noexcept { return w_; }
  Eigen::Index size() const noexcept { return w_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return w_(i, j); }

 private:
  Eigen::MatrixXd w_;
};

/// Number of positions where `u` and `v` differ. Abstain-vs-vote counts as a difference.
template <typename DerivedU, typename DerivedV>
std::int64_t hamming_distance(const Eigen::DenseBase<DerivedU>& u,
                              const Eigen::DenseBase<DerivedV>& v) {
  if (u.size() != v.size()) {
    throw DimensionError("hamming_distance: vectors have lengths " + std::to_string(u.size()) +
                         " and " + std::to_string(v.size()));
  }
  return static_cast<std::int64_t>((u.derived().array() != v.derived().array()).count());
}

inline std::int64_t hamming_distance(const std::vector<int>& u, const std::vector<int>& v) {
  using Map = Eigen::Map<const Eigen::VectorXi>;
  return hamming_distance(Map(u.data(), static_cast<Eigen::Index>(u.size())),
                          Map(v.data(), static_cast<Eigen::Index>(v.size())));
}

template <typename Scalar = double>
Scalar weight_from_distance(std::int64_t d) {
  return Scalar(1) / (static_cast<Scalar>(d) + Scalar(1));
}

/// w(i, j) = 1 / (hamming(i, j) + 1) off the diagonal, 0 on it.
/// Throws InsufficientDataError for fewer than two members.
WeightMatrix similarity_matrix(const VoteMatrix& m);

/// Writes W as CSV: a header of member ids, then one row per member led by its id.
void write_weights_csv(const WeightMatrix& w, const std::vector<Member>& roster,
                       std::ostream& out);

}  // namespace senrank
