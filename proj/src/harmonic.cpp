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

#include "senrank/harmonic.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <optional>

namespace senrank {

namespace {

// Reciprocal condition estimate below which a factorization is treated as singular.
constexpr double kMinRcond = 1e-13;

Eigen::VectorXd gather(const Eigen::VectorXd& v, const std::vector<Eigen::Index>& idx) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out(static_cast<Eigen::Index>(k)) = v(idx[k]);
  return out;
}

std::optional<Eigen::VectorXd> solve_spd(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success || !(llt.rcond() > kMinRcond)) return std::nullopt;
  return Eigen::VectorXd(llt.solve(b));
}

std::optional<Eigen::VectorXd> solve_general(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  if (!lu.isInvertible() || !(lu.rcond() > kMinRcond)) return std::nullopt;
  return Eigen::VectorXd(lu.solve(b));
}

}  // namespace

AnchorSet::AnchorSet(std::vector<Anchor> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) {
    throw InvalidAnchorError("at least two anchors are required, got " +
                             std::to_string(entries_.size()));
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const Anchor& a, const Anchor& b) { return a.index < b.index; });
  bool has_positive = false;
  bool has_negative = false;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const Anchor& a = entries_[k];
    if (a.index < 0) throw InvalidAnchorError("anchor index " + std::to_string(a.index) + " is negative");
    if (k > 0 && entries_[k - 1].index == a.index) {
      throw DuplicateAnchorError("member index " + std::to_string(a.index) + " is anchored twice");
    }
    if (!(a.score >= -1.0 && a.score <= 1.0)) {
      throw InvalidAnchorError("anchor score " + std::to_string(a.score) + " is outside [-1, +1]");
    }
    has_positive = has_positive || a.score > 0.0;
    has_negative = has_negative || a.score < 0.0;
  }
  if (!has_positive || !has_negative) {
    throw InvalidAnchorError("anchors need at least one positive and one negative score");
  }
}

bool AnchorSet::contains(Eigen::Index index) const {
  return std::binary_search(entries_.begin(), entries_.end(), Anchor{index, 0.0},
                            [](const Anchor& a, const Anchor& b) { return a.index < b.index; });
}

void AnchorSet::check_bounds(Eigen::Index n) const {
  for (const auto& a : entries_) {
    if (a.index >= n) {
      throw InvalidAnchorError("anchor index " + std::to_string(a.index) +
                               " is out of range for " + std::to_string(n) + " members");
    }
  }
}

Laplacian laplacian(const WeightMatrix& w) { return Laplacian(laplacian_matrix(w.matrix())); }

double energy(const Eigen::VectorXd& f, const WeightMatrix& w) {
  if (f.size() != w.size()) {
    throw DimensionError("score vector has length " + std::to_string(f.size()) +
                         " but weight matrix is " + std::to_string(w.size()) + "x" +
                         std::to_string(w.size()));
  }
  return energy_sum(f, w.matrix());
}

LaplacianPartition partition(const Laplacian& lap, const AnchorSet& anchors) {
  const Eigen::Index n = lap.size();
  anchors.check_bounds(n);

  LaplacianPartition p;
  p.f_labeled.resize(static_cast<Eigen::Index>(anchors.size()));
  for (std::size_t k = 0; k < anchors.size(); ++k) {
    p.labeled.push_back(anchors.entries()[k].index);
    p.f_labeled(static_cast<Eigen::Index>(k)) = anchors.entries()[k].score;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!anchors.contains(i)) p.unlabeled.push_back(i);
  }
  const auto& delta = lap.matrix();
  p.uu = delta(p.unlabeled, p.unlabeled);
  p.ul = delta(p.unlabeled, p.labeled);
  return p;
}

ScoreVector solve_harmonic(const Laplacian& lap, const AnchorSet& anchors) {
  const LaplacianPartition p = partition(lap, anchors);
  const Eigen::Index n = lap.size();

  ScoreVector out{Eigen::VectorXd::Zero(n), std::vector<bool>(static_cast<std::size_t>(n), false)};
  for (const auto& a : anchors.entries()) {
    out.f(a.index) = a.score;
    out.labeled[static_cast<std::size_t>(a.index)] = true;
  }
  if (p.unlabeled.empty()) return out;

  const Eigen::VectorXd rhs = -(p.ul * p.f_labeled);
  std::optional<Eigen::VectorXd> f_u = solve_spd(p.uu, rhs);
  if (!f_u) f_u = solve_general(p.uu, rhs);
  if (!f_u || !f_u->allFinite()) {
    throw SingularSystemError(
        "the unlabeled block of the Laplacian is singular; check that every member is connected "
        "to the anchors through positive weights");
  }
  const double residual = (p.uu * *f_u - rhs).lpNorm<Eigen::Infinity>();
  if (!(residual <= 1e-9 * std::max(1.0, rhs.lpNorm<Eigen::Infinity>()))) {
    throw SingularSystemError("linear solve residual " + std::to_string(residual) +
                              " is too large; the unlabeled block is numerically singular");
  }
  for (std::size_t k = 0; k < p.unlabeled.size(); ++k) {
    out.f(p.unlabeled[k]) = (*f_u)(static_cast<Eigen::Index>(k));
  }
  return out;
}

double stationarity_residual(const LaplacianPartition& parts, const ScoreVector& scores) {
  if (parts.unlabeled.empty()) return 0.0;
  const Eigen::VectorXd f_u = gather(scores.f, parts.unlabeled);
  return (parts.uu * f_u + parts.ul * parts.f_labeled).lpNorm<Eigen::Infinity>();
}

}  // namespace senrank
