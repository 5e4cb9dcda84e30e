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

#include "senrank/pipeline.hpp"

#include "senrank/error.hpp"

#include <cerrno>
#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace senrank {

VoteMatrix load_votes(const std::string& path, std::optional<InputFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open input file '" + path + "'");
  if (!format) {
    format = std::filesystem::path(path).extension() == ".ord" ? InputFormat::Ord : InputFormat::Csv;
  }
  return *format == InputFormat::Ord ? parse_ord(in) : parse_csv(in);
}

AnchorSpec parse_anchor_spec(const std::string& text) {
  const auto eq = text.rfind('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw InvalidArgumentError("anchor '" + text + "' is not of the form NAME_OR_ID=SCORE");
  }
  const std::string number = text.substr(eq + 1);
  char* end = nullptr;
  errno = 0;
  const double score = std::strtod(number.c_str(), &end);
  if (errno != 0 || end != number.c_str() + number.size()) {
    throw InvalidArgumentError("anchor score '" + number + "' is not a number");
  }
  return AnchorSpec{text.substr(0, eq), score};
}

RankResult rank_members(const VoteMatrix& votes, const WeightMatrix& w, const AnchorPolicy& policy) {
  if (w.size() != votes.members()) {
    throw DimensionError("weight matrix does not match the roster size");
  }
  std::optional<InternalAnchors> internal;
  std::optional<AnchorSet> anchors;
  if (policy.automatic) {
    if (!policy.named.empty()) {
      throw InvalidArgumentError("explicit anchors and automatic anchors are mutually exclusive");
    }
    std::optional<Eigen::Index> orient;
    if (policy.orient) orient = resolve_member(votes.roster(), *policy.orient);
    internal = anchors_internal(w, orient);
    anchors = internal->anchors;
  } else {
    if (policy.orient) throw InvalidArgumentError("an orientation only applies to automatic anchors");
    anchors = anchors_by_name(votes.roster(), policy.named);
  }
  ScoreVector scores = solve_harmonic(laplacian(w), *anchors);
  Ranking ranking = make_ranking(scores, votes.roster());
  return RankResult{std::move(*anchors), std::move(internal), std::move(scores), std::move(ranking)};
}

}  // namespace senrank
