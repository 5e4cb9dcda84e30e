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

#include "senrank/rank.hpp"

#include "senrank/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace senrank {

namespace {

// Scores of `b` reordered to follow the member order of `a`.
std::pair<std::vector<double>, std::vector<double>> aligned_scores(const Ranking& a,
                                                                   const Ranking& b) {
  if (a.size() != b.size()) {
    throw InvalidArgumentError("rankings cover different member sets (" +
                               std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                               " members)");
  }
  std::unordered_map<std::string, double> b_score;
  for (const auto& row : b.rows) b_score.emplace(row.member.id, row.score);
  std::vector<double> x;
  std::vector<double> y;
  x.reserve(a.size());
  y.reserve(a.size());
  for (const auto& row : a.rows) {
    const auto it = b_score.find(row.member.id);
    if (it == b_score.end()) {
      throw InvalidArgumentError("member '" + row.member.id + "' is missing from the second ranking");
    }
    x.push_back(row.score);
    y.push_back(it->second);
  }
  if (b_score.size() != a.size()) throw InvalidArgumentError("second ranking repeats a member id");
  return {std::move(x), std::move(y)};
}

// 1-based ranks by ascending value, ties sharing their average rank.
std::vector<double> average_ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&v](std::size_t i, std::size_t j) { return v[i] < v[j]; });
  std::vector<double> ranks(v.size());
  for (std::size_t start = 0; start < order.size();) {
    std::size_t end = start + 1;
    while (end < order.size() && v[order[end]] == v[order[start]]) ++end;
    const double avg = 0.5 * static_cast<double>(start + end + 1);
    for (std::size_t k = start; k < end; ++k) ranks[order[k]] = avg;
    start = end;
  }
  return ranks;
}

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

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

Ranking make_ranking(const ScoreVector& scores, const std::vector<Member>& roster) {
  const auto n = roster.size();
  if (static_cast<std::size_t>(scores.f.size()) != n || scores.labeled.size() != n) {
    throw DimensionError("score vector has length " + std::to_string(scores.f.size()) +
                         " but roster has " + std::to_string(n) + " members");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const double si = scores.f(static_cast<Eigen::Index>(i));
    const double sj = scores.f(static_cast<Eigen::Index>(j));
    if (si != sj) return si > sj;
    if (roster[i].name != roster[j].name) return roster[i].name < roster[j].name;
    return roster[i].id < roster[j].id;
  });

  Ranking r;
  r.rows.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = order[k];
    r.rows.push_back(RankingRow{static_cast<int>(k + 1), roster[i],
                                scores.f(static_cast<Eigen::Index>(i)), scores.labeled[i]});
  }
  return r;
}

double kendall_tau(const Ranking& a, const Ranking& b) {
  const auto [x, y] = aligned_scores(a, b);
  const std::size_t n = x.size();
  long long concordant = 0;
  long long discordant = 0;
  long long ties_x = 0;
  long long ties_y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx == 0.0) ++ties_x;
      if (dy == 0.0) ++ties_y;
      if (dx == 0.0 || dy == 0.0) continue;
      if ((dx > 0.0) == (dy > 0.0)) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const auto pairs = static_cast<long long>(n * (n - 1) / 2);
  const double denom = std::sqrt(static_cast<double>(pairs - ties_x) *
                                static_cast<double>(pairs - ties_y));
  if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(concordant - discordant) / denom;
}

double spearman_rho(const Ranking& a, const Ranking& b) {
  const auto [x, y] = aligned_scores(a, b);
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  const auto n = static_cast<Eigen::Index>(rx.size());
  const Eigen::Map<const Eigen::VectorXd> vx(rx.data(), n);
  const Eigen::Map<const Eigen::VectorXd> vy(ry.data(), n);
  const Eigen::VectorXd cx = vx.array() - vx.mean();
  const Eigen::VectorXd cy = vy.array() - vy.mean();
  const double denom = cx.norm() * cy.norm();
  if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return cx.dot(cy) / denom;
}

std::string format_score(double value) {
  if (!std::isfinite(value)) throw InvalidArgumentError("cannot render a non-finite score");
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  std::string text(buf, res.ptr);

  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.erase(0, 1);
  }
  const auto dot = text.find('.');
  std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);

  std::string digits = whole + (frac.size() >= 6 ? frac.substr(0, 6) : frac + std::string(6 - frac.size(), '0'));
  const std::string rest = frac.size() > 6 ? frac.substr(6) : "";
  bool round_up = false;
  if (!rest.empty()) {
    if (rest[0] > '5') {
      round_up = true;
    } else if (rest[0] == '5') {
      const bool beyond_half = rest.find_first_not_of('0', 1) != std::string::npos;
      round_up = beyond_half || ((digits.back() - '0') % 2 == 1);
    }
  }
  if (round_up) {
    std::size_t k = digits.size();
    while (k > 0) {
      --k;
      if (digits[k] == '9') {
        digits[k] = '0';
      } else {
        ++digits[k];
        break;
      }
      if (k == 0) digits.insert(digits.begin(), '1');
    }
  }
  const std::string int_part = digits.substr(0, digits.size() - 6);
  const std::string frac_part = digits.substr(digits.size() - 6);
  const bool zero = digits.find_first_not_of('0') == std::string::npos;
  return (negative && !zero ? "-" : "") + int_part + "." + frac_part;
}

std::string write_ranking(const Ranking& r, RankingFormat format) {
  std::ostringstream out;
  switch (format) {
    case RankingFormat::TextTable: {
      std::size_t rank_w = 4;
      std::size_t name_w = 4;
      for (const auto& row : r.rows) {
        rank_w = std::max(rank_w, std::to_string(row.rank).size());
        name_w = std::max(name_w, row.member.name.size());
      }
      auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - std::min(w, s.size()), ' ');
      };
      out << pad("Rank", rank_w) << "  " << pad("Name", name_w) << "  Party\n";
      for (const auto& row : r.rows) {
        out << pad(std::to_string(row.rank), rank_w) << "  " << pad(row.member.name, name_w)
            << "  " << row.member.party << '\n';
      }
      break;
    }
    case RankingFormat::Csv:
      out << "rank,id,name,party,score,anchored\n";
      for (const auto& row : r.rows) {
        out << row.rank << ',' << csv_field(row.member.id) << ',' << csv_field(row.member.name)
            << ',' << csv_field(row.member.party) << ',' << format_score(row.score) << ','
            << (row.anchored ? "true" : "false") << '\n';
      }
      break;
    case RankingFormat::Json:
      out << "[\n";
      for (std::size_t k = 0; k < r.rows.size(); ++k) {
        const auto& row = r.rows[k];
        out << "  {\"rank\": " << row.rank << ", \"id\": " << json_string(row.member.id)
            << ", \"name\": " << json_string(row.member.name)
            << ", \"party\": " << json_string(row.member.party)
            << ", \"state\": " << json_string(row.member.state)
            << ", \"score\": " << format_score(row.score)
            << ", \"anchored\": " << (row.anchored ? "true" : "false") << '}'
            << (k + 1 < r.rows.size() ? ",\n" : "\n");
      }
      out << "]\n";
      break;
  }
  return out.str();
}

Ranking read_ranking_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedDataError(std::string("ranking json: ") + e.what());
  }
  if (!doc.is_array()) throw MalformedDataError("ranking json must be an array");
  Ranking r;
  try {
    for (const auto& obj : doc) {
      r.rows.push_back(RankingRow{obj.at("rank").get<int>(),
                                  Member{obj.at("id").get<std::string>(),
                                         obj.at("name").get<std::string>(),
                                         obj.at("party").get<std::string>(),
                                         obj.value("state", std::string{})},
                                  obj.at("score").get<double>(), obj.at("anchored").get<bool>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw MalformedDataError(std::string("ranking json: ") + e.what());
  }
  return r;
}

}  // namespace senrank
