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

#include <string>
#include <string_view>
#include <vector>

namespace senrank {

struct RankingRow {
  int rank;  // 1-based
  Member member;
  double score;
  bool anchored;

  friend bool operator==(const RankingRow&, const RankingRow&) = default;
};

/// Rows in descending score order; equal scores ordered by name, then id.
struct Ranking {
  std::vector<RankingRow> rows;

  std::size_t size() const noexcept { return rows.size(); }
  friend bool operator==(const Ranking&, const Ranking&) = default;
};

enum class RankingFormat { TextTable, Csv, Json };

Ranking make_ranking(const ScoreVector& scores, const std::vector<Member>& roster);

/// Kendall's tau-b between the score orders of two rankings over the same members
/// (matched by id). Ties are exact score equality. NaN if either side is entirely tied.
double kendall_tau(const Ranking& a, const Ranking& b);

/// Spearman's rho: Pearson correlation of the average ranks of the two score orders.
double spearman_rho(const Ranking& a, const Ranking& b);

/// Six decimal places, ties on the shortest round-trip decimal rounded half to even.
std::string format_score(double value);

std::string write_ranking(const Ranking& r, RankingFormat format);

/// Inverse of the Json format.
Ranking read_ranking_json(std::string_view text);

}  // namespace senrank
