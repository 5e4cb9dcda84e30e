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

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace senrank {

struct Member {
  std::string id;
  std::string name;
  std::string party;  // "D", "R", "I" or "?"
  std::string state;  // two-letter code, may be empty

  friend bool operator==(const Member&, const Member&) = default;
};

/// Encoded position on a single roll call.
enum class Vote : std::int8_t { Nay = -1, Absent = 0, Yea = 1 };

/// Row-major grid of encoded votes, one row per member, one column per roll call.
using VoteGrid = Eigen::Matrix<std::int8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

class VoteMatrix {
 public:
  VoteMatrix() = default;

  /// Throws DimensionError if the grid shape disagrees with the roster or roll-call ids,
  /// InvalidArgumentError if a cell is outside {-1, 0, +1} or a member id repeats.
  VoteMatrix(std::vector<Member> roster, VoteGrid votes, std::vector<std::string> rollcall_ids);

  const std::vector<Member>& roster() const noexcept { return roster_; }
  const VoteGrid& votes() const noexcept { return votes_; }
  const std::vector<std::string>& rollcall_ids() const noexcept { return rollcall_ids_; }

  Eigen::Index members() const noexcept { return votes_.rows(); }
  Eigen::Index rollcalls() const noexcept { return votes_.cols(); }

  friend bool operator==(const VoteMatrix& a, const VoteMatrix& b) {
    return a.roster_ == b.roster_ && a.rollcall_ids_ == b.rollcall_ids_ &&
           a.votes_.rows() == b.votes_.rows() && a.votes_.cols() == b.votes_.cols() &&
           a.votes_ == b.votes_;
  }

 private:
  std::vector<Member> roster_;
  VoteGrid votes_;
  std::vector<std::string> rollcall_ids_;
};

/// VoteView convention: 1-3 yea, 4-6 nay, 0 and 7-9 not voting.
/// Throws MalformedDataError naming the value when raw_code is outside [0, 9].
Vote encode_vote(int raw_code);

/// Inverse used when writing files: Yea -> 1, Nay -> 6, Absent -> 9.
int raw_code(Vote v) noexcept;

/// CSV with header `id,name,party,state,v1,...,vm`; vote cells are single digits.
/// Double-quoted fields are accepted for names containing commas.
VoteMatrix parse_csv(std::istream& source);

/// Legacy fixed-width .ord records: columns 1-36 member header, 37+ one digit per roll call.
VoteMatrix parse_ord(std::istream& source);

void write_csv(const VoteMatrix& m, std::ostream& out);

/// Keeps the roll calls whose majority share of cast (non-abstaining) votes is at most
/// `threshold`. Columns where nobody voted or nobody dissented are always dropped. Roster and column order are preserved.
VoteMatrix filter_near_unanimous(const VoteMatrix& m, double threshold);

/// Two blocs of `n_per_bloc` members ("D" voting +1, "R" voting -1) whose votes flip
/// independently with probability `flip_prob`. Deterministic for a given seed.
VoteMatrix generate_synthetic(int n_per_bloc, int rollcalls, double flip_prob, std::uint64_t seed);

}  // namespace senrank
