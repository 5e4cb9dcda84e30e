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

#include "senrank/anchors.hpp"
#include "senrank/harmonic.hpp"
#include "senrank/ingest.hpp"
#include "senrank/rank.hpp"
#include "senrank/similarity.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace senrank {

enum class InputFormat { Csv, Ord };

/// Reads a vote file. Without an explicit format, a `.ord` extension selects Ord and
/// anything else Csv. Throws ValidationError when the file cannot be opened.
VoteMatrix load_votes(const std::string& path, std::optional<InputFormat> format = std::nullopt);

/// How the anchors of one run are chosen: explicit specs, or the least-similar pair.
struct AnchorPolicy {
  std::vector<AnchorSpec> named;
  bool automatic = false;
  std::optional<std::string> orient;  ///< id or name that receives +1 under `automatic`
};

struct RankResult {
  AnchorSet anchors;
  std::optional<InternalAnchors> internal;  ///< set when the pair was detected
  ScoreVector scores;
  Ranking ranking;
};

/// Anchors, solves and ranks one vote matrix against a precomputed weight matrix.
RankResult rank_members(const VoteMatrix& votes, const WeightMatrix& w, const AnchorPolicy& policy);

/// Parses `NAME_OR_ID=SCORE`, splitting on the last '='.
AnchorSpec parse_anchor_spec(const std::string& text);

}  // namespace senrank
