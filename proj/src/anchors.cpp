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

#include "senrank/anchors.hpp"

#include <algorithm>
#include <cctype>

namespace senrank {

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

std::string near_matches(const std::vector<Member>& roster, const std::string& key) {
  const std::string needle = upper(key);
  std::string out;
  int found = 0;
  for (const auto& m : roster) {
    const std::string name = upper(m.name);
    const std::string id = upper(m.id);
    const bool close = name.find(needle) != std::string::npos ||
                       (!name.empty() && needle.find(name) != std::string::npos) ||
                       id == needle;
    if (!close) continue;
    out += (found == 0 ? "" : ", ") + m.name + " (id " + m.id + ")";
    if (++found == 5) break;
  }
  return found == 0 ? "no near matches" : "near matches: " + out;
}

}  // namespace

Eigen::Index resolve_member(const std::vector<Member>& roster, const std::string& key) {
  for (std::size_t i = 0; i < roster.size(); ++i) {
    if (roster[i].id == key) return static_cast<Eigen::Index>(i);
  }
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < roster.size(); ++i) {
    if (roster[i].name == key) hits.push_back(i);
  }
  if (hits.empty()) {
    throw AnchorNotFoundError("no member with id or name '" + key + "'; " +
                              near_matches(roster, key));
  }
  if (hits.size() > 1) {
    std::string ids;
    for (auto i : hits) ids += (ids.empty() ? "" : ", ") + roster[i].id;
    throw AmbiguousAnchorError("name '" + key + "' matches " + std::to_string(hits.size()) +
                               " members (ids " + ids + "); anchor by id instead");
  }
  return static_cast<Eigen::Index>(hits.front());
}

AnchorSet anchors_by_name(const std::vector<Member>& roster, const std::vector<AnchorSpec>& specs) {
  if (specs.size() < 2) {
    throw InvalidAnchorError("at least two anchors are required, got " +
                             std::to_string(specs.size()));
  }
  std::vector<Anchor> entries;
  entries.reserve(specs.size());
  for (const auto& spec : specs) {
    const Eigen::Index idx = resolve_member(roster, spec.key);
    const auto clash = std::find_if(entries.begin(), entries.end(),
                                    [idx](const Anchor& a) { return a.index == idx; });
    if (clash != entries.end()) {
      throw DuplicateAnchorError("member '" + roster[static_cast<std::size_t>(idx)].name +
                                 "' (id " + roster[static_cast<std::size_t>(idx)].id +
                                 ") is anchored more than once");
    }
    entries.push_back(Anchor{idx, spec.score});
  }
  return AnchorSet(std::move(entries));
}

InternalAnchors anchors_internal(const WeightMatrix& w, std::optional<Eigen::Index> orientation) {
  const Eigen::Index n = w.size();
  if (n < 2) throw InsufficientDataError("internal anchors need at least 2 members");

  // Strict < in row-major order keeps the lexicographically smallest (i, j) on ties.
  Eigen::Index best_i = 0;
  Eigen::Index best_j = 1;
  double best = w(0, 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (w(i, j) < best) {
        best = w(i, j);
        best_i = i;
        best_j = j;
      }
    }
  }

  Eigen::Index positive = best_i;
  Eigen::Index negative = best_j;
  bool arbitrary = true;
  if (orientation) {
    if (*orientation == best_j) {
      std::swap(positive, negative);
    } else if (*orientation != best_i) {
      throw OrientationError("orientation member " + std::to_string(*orientation) +
                             " is not in the least-similar pair (" + std::to_string(best_i) +
                             ", " + std::to_string(best_j) + ")");
    }
    arbitrary = false;
  }
  return InternalAnchors{AnchorSet({Anchor{positive, 1.0}, Anchor{negative, -1.0}}), positive,
                         negative, arbitrary};
}

}  // namespace senrank
