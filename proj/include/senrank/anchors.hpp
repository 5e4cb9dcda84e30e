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

#include "senrank/harmonic.hpp"
#include "senrank/ingest.hpp"
#include "senrank/similarity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace senrank {

struct AnchorSpec {
  std::string key;  ///< member id, or exact display name
  double score;
};

/// Resolves each spec to one roster member. An exact id match wins over a name match.
/// Throws AnchorNotFoundError (with near matches), AmbiguousAnchorError when a name is
/// shared, DuplicateAnchorError when two specs resolve to the same member, and
/// InvalidAnchorError when the resulting set is degenerate.
AnchorSet anchors_by_name(const std::vector<Member>& roster, const std::vector<AnchorSpec>& specs);

struct InternalAnchors {
  AnchorSet anchors;
  Eigen::Index positive;  ///< member given +1
  Eigen::Index negative;  ///< member given -1
  bool orientation_arbitrary;
};

/// Anchors the least similar pair: minimum w(i, j) over i < j, ties to the smallest
/// (i, j). `orientation`, when given, must be one of the pair and receives +1; otherwise
/// the lower index does and the result is flagged arbitrary.
InternalAnchors anchors_internal(const WeightMatrix& w,
                                 std::optional<Eigen::Index> orientation = std::nullopt);

/// Index of the member whose id, or failing that exact name, equals `key`.
Eigen::Index resolve_member(const std::vector<Member>& roster, const std::string& key);

}  // namespace senrank
