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

#include "senrank/similarity.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace senrank {

WeightMatrix::WeightMatrix(Eigen::MatrixXd w) : w_(std::move(w)) {
  if (w_.rows() != w_.cols()) {
    throw DimensionError("weight matrix must be square, got " + std::to_string(w_.rows()) + "x" +
                         std::to_string(w_.cols()));
  }
  if (!w_.allFinite()) throw InvalidArgumentError("weight matrix has non-finite entries");
  if ((w_.array() < 0.0).any()) throw InvalidArgumentError("weight matrix has negative entries");
  if ((w_.diagonal().array() != 0.0).any()) {
    throw InvalidArgumentError("weight matrix diagonal must be zero");
  }
  if (w_ != w_.transpose()) throw InvalidArgumentError("weight matrix is not symmetric");
}

WeightMatrix similarity_matrix(const VoteMatrix& m) {
  const Eigen::Index n = m.members();
  if (n < 2) {
    throw InsufficientDataError("similarity matrix needs at least 2 members, got " +
                                std::to_string(n));
  }
  const VoteGrid& votes = m.votes();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double weight = weight_from_distance(hamming_distance(votes.row(i), votes.row(j)));
      w(i, j) = weight;
      w(j, i) = weight;
    }
  }
  return WeightMatrix(std::move(w));
}

void write_weights_csv(const WeightMatrix& w, const std::vector<Member>& roster,
                       std::ostream& out) {
  if (static_cast<std::size_t>(w.size()) != roster.size()) {
    throw DimensionError("roster size does not match weight matrix");
  }
  out << "id";
  for (const auto& m : roster) out << ',' << m.id;
  out << '\n';
  char buf[64];
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    out << roster[static_cast<std::size_t>(i)].id;
    for (Eigen::Index j = 0; j < w.size(); ++j) {
      auto res = std::to_chars(buf, buf + sizeof buf, w(i, j));
      out << ',' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
    }
    out << '\n';
  }
}

}  // namespace senrank
