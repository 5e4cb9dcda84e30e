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

#include "senrank/ingest.hpp"

#include "senrank/error.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace senrank {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

// Splits one CSV record. Quoted fields may contain commas and doubled quotes.
std::vector<std::string> split_csv_record(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && trim(field).empty()) {
      field.clear();
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? field : std::string(trim(field)));
      field.clear();
      was_quoted = false;
    } else {
      field.push_back(c);
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quoted field");
  fields.push_back(was_quoted ? field : std::string(trim(field)));
  return fields;
}

std::string party_from_code(std::string_view code) {
  code = trim(code);
  if (code == "100") return "D";
  if (code == "200") return "R";
  return "I";
}

void check_unique_id(std::unordered_set<std::string>& seen, const std::string& id,
                     std::size_t line_no) {
  if (!seen.insert(id).second) throw ParseError(line_no, "duplicate member id '" + id + "'");
}

}  // namespace

VoteMatrix::VoteMatrix(std::vector<Member> roster, VoteGrid votes,
                       std::vector<std::string> rollcall_ids)
    : roster_(std::move(roster)), votes_(std::move(votes)), rollcall_ids_(std::move(rollcall_ids)) {
  if (static_cast<std::size_t>(votes_.rows()) != roster_.size() ||
      static_cast<std::size_t>(votes_.cols()) != rollcall_ids_.size()) {
    throw DimensionError("vote grid is " + std::to_string(votes_.rows()) + "x" +
                         std::to_string(votes_.cols()) + " but roster has " +
                         std::to_string(roster_.size()) + " members and " +
                         std::to_string(rollcall_ids_.size()) + " roll calls");
  }
  if ((votes_.array() < -1).any() || (votes_.array() > 1).any()) {
    throw InvalidArgumentError("vote grid contains a value outside {-1, 0, +1}");
  }
  std::unordered_set<std::string> ids;
  for (const auto& m : roster_) {
    if (!ids.insert(m.id).second) throw InvalidArgumentError("duplicate member id '" + m.id + "'");
    if (m.name.empty()) throw InvalidArgumentError("member '" + m.id + "' has an empty name");
  }
}

Vote encode_vote(int raw_code) {
  switch (raw_code) {
    case 1:
    case 2:
    case 3:
      return Vote::Yea;
    case 4:
    case 5:
    case 6:
      return Vote::Nay;
    case 0:
    case 7:
    case 8:
    case 9:
      return Vote::Absent;
    default:
      throw MalformedDataError("vote code " + std::to_string(raw_code) + " is outside [0, 9]");
  }
}

int raw_code(Vote v) noexcept {
  switch (v) {
    case Vote::Yea:
      return 1;
    case Vote::Nay:
      return 6;
    case Vote::Absent:
      break;
  }
  return 9;
}

VoteMatrix parse_csv(std::istream& source) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(source, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    header = split_csv_record(line, line_no);
    break;
  }
  if (header.empty()) throw ParseError(line_no == 0 ? 1 : line_no, "missing header row");
  if (header.size() < 4 || header[0] != "id" || header[1] != "name" || header[2] != "party" ||
      header[3] != "state") {
    throw ParseError(line_no, "header must begin with id,name,party,state");
  }
  std::vector<std::string> rollcall_ids(header.begin() + 4, header.end());
  const std::size_t n_votes = rollcall_ids.size();

  std::vector<Member> roster;
  std::vector<std::vector<std::int8_t>> rows;
  std::unordered_set<std::string> seen;
  while (std::getline(source, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    auto fields = split_csv_record(line, line_no);
    if (fields.size() != header.size()) {
      throw ParseError(line_no, "expected " + std::to_string(header.size()) + " fields, found " +
                                    std::to_string(fields.size()));
    }
    Member m{fields[0], fields[1], fields[2].empty() ? "?" : fields[2], fields[3]};
    if (m.id.empty()) throw ParseError(line_no, "empty member id");
    if (m.name.empty()) throw ParseError(line_no, "empty member name");
    check_unique_id(seen, m.id, line_no);

    std::vector<std::int8_t> row(n_votes);
    for (std::size_t j = 0; j < n_votes; ++j) {
      const std::string& cell = fields[4 + j];
      if (cell.size() != 1 || cell[0] < '0' || cell[0] > '9') {
        throw ParseError(line_no, "vote cell '" + cell + "' in column " + rollcall_ids[j] +
                                      " is not a digit 0-9");
      }
      row[j] = static_cast<std::int8_t>(encode_vote(cell[0] - '0'));
    }
    roster.push_back(std::move(m));
    rows.push_back(std::move(row));
  }

  VoteGrid grid(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n_votes));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < n_votes; ++j) grid(i, j) = rows[i][j];
  }
  return VoteMatrix(std::move(roster), std::move(grid), std::move(rollcall_ids));
}

VoteMatrix parse_ord(std::istream& source) {
  constexpr std::size_t kHeaderWidth = 36;
  std::string line;
  std::size_t line_no = 0;
  std::vector<Member> roster;
  std::vector<std::string> vote_regions;
  std::unordered_set<std::string> seen;
  std::size_t n_votes = 0;

  while (std::getline(source, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() < kHeaderWidth) {
      throw ParseError(line_no, "record is " + std::to_string(line.size()) +
                                    " characters, shorter than the 36-column header region");
    }
    std::string_view record(line);
    Member m{std::string(trim(record.substr(3, 5))), std::string(trim(record.substr(25, 11))),
             party_from_code(record.substr(20, 3)), ""};
    if (m.id.empty()) throw ParseError(line_no, "empty member id in columns 4-8");
    if (m.name.empty()) throw ParseError(line_no, "empty member name in columns 26-36");

    std::string_view votes = record.substr(kHeaderWidth);
    while (!votes.empty() && (votes.back() == ' ' || votes.back() == '\t')) votes.remove_suffix(1);
    for (std::size_t j = 0; j < votes.size(); ++j) {
      if (votes[j] < '0' || votes[j] > '9') {
        throw ParseError(line_no, "vote digit '" + std::string(1, votes[j]) + "' at column " +
                                      std::to_string(kHeaderWidth + j + 1) + " is not 0-9");
      }
    }
    if (roster.empty()) {
      n_votes = votes.size();
    } else if (votes.size() != n_votes) {
      throw ParseError(line_no, "record has " + std::to_string(votes.size()) +
                                    " votes, expected " + std::to_string(n_votes));
    }
    check_unique_id(seen, m.id, line_no);
    roster.push_back(std::move(m));
    vote_regions.emplace_back(votes);
  }

  VoteGrid grid(static_cast<Eigen::Index>(roster.size()), static_cast<Eigen::Index>(n_votes));
  for (std::size_t i = 0; i < vote_regions.size(); ++i) {
    for (std::size_t j = 0; j < n_votes; ++j) {
      grid(i, j) = static_cast<std::int8_t>(encode_vote(vote_regions[i][j] - '0'));
    }
  }
  std::vector<std::string> rollcall_ids;
  rollcall_ids.reserve(n_votes);
  for (std::size_t j = 1; j <= n_votes; ++j) rollcall_ids.push_back(std::to_string(j));
  return VoteMatrix(std::move(roster), std::move(grid), std::move(rollcall_ids));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

void write_csv(const VoteMatrix& m, std::ostream& out) {
  out << "id,name,party,state";
  for (const auto& id : m.rollcall_ids()) out << ',' << csv_field(id);
  out << '\n';
  for (Eigen::Index i = 0; i < m.members(); ++i) {
    const Member& mem = m.roster()[static_cast<std::size_t>(i)];
    out << csv_field(mem.id) << ',' << csv_field(mem.name) << ',' << csv_field(mem.party) << ','
        << csv_field(mem.state);
    for (Eigen::Index j = 0; j < m.rollcalls(); ++j) {
      out << ',' << raw_code(static_cast<Vote>(m.votes()(i, j)));
    }
    out << '\n';
  }
}

VoteMatrix filter_near_unanimous(const VoteMatrix& m, double threshold) {
  if (!(threshold > 0.5 && threshold <= 1.0)) {
    throw InvalidArgumentError("filter threshold must lie in (0.5, 1.0], got " +
                               std::to_string(threshold));
  }
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < m.rollcalls(); ++j) {
    const auto column = m.votes().col(j);
    const auto yea = (column.array() == 1).count();
    const auto nay = (column.array() == -1).count();
    const auto cast = yea + nay;
    // Degenerate: nobody voted, or nobody dissented.
    if (yea == 0 || nay == 0) continue;
    const double agreement = static_cast<double>(std::max(yea, nay)) / static_cast<double>(cast);
    if (agreement <= threshold) keep.push_back(j);
  }

  VoteGrid grid(m.members(), static_cast<Eigen::Index>(keep.size()));
  std::vector<std::string> ids;
  ids.reserve(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    grid.col(static_cast<Eigen::Index>(k)) = m.votes().col(keep[k]);
    ids.push_back(m.rollcall_ids()[static_cast<std::size_t>(keep[k])]);
  }
  return VoteMatrix(m.roster(), std::move(grid), std::move(ids));
}

VoteMatrix generate_synthetic(int n_per_bloc, int rollcalls, double flip_prob,
                              std::uint64_t seed) {
  if (n_per_bloc < 1) throw InvalidArgumentError("n_per_bloc must be at least 1");
  if (rollcalls < 1) throw InvalidArgumentError("roll-call count must be at least 1");
  if (!(flip_prob >= 0.0 && flip_prob < 0.5)) {
    throw InvalidArgumentError("flip probability must lie in [0, 0.5)");
  }

  std::mt19937_64 rng(seed);
  // 53 random bits mapped to [0, 1); identical on every standard library.
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  const int n = 2 * n_per_bloc;
  std::vector<Member> roster;
  roster.reserve(static_cast<std::size_t>(n));
  VoteGrid grid(n, rollcalls);
  for (int i = 0; i < n; ++i) {
    const bool bloc_a = i < n_per_bloc;
    char label[16];
    std::snprintf(label, sizeof label, "%c%03d", bloc_a ? 'A' : 'B',
                  (bloc_a ? i : i - n_per_bloc) + 1);
    roster.push_back(Member{label, std::string("MEMBER_") + label, bloc_a ? "D" : "R", ""});
    const std::int8_t ideal = bloc_a ? 1 : -1;
    for (int j = 0; j < rollcalls; ++j) {
      grid(i, j) = uniform() < flip_prob ? static_cast<std::int8_t>(-ideal) : ideal;
    }
  }
  std::vector<std::string> ids;
  for (int j = 1; j <= rollcalls; ++j) ids.push_back(std::to_string(j));
  return VoteMatrix(std::move(roster), std::move(grid), std::move(ids));
}

}  // namespace senrank
