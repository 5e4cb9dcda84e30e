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

#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace senrank;

namespace {

std::vector<Member> roster_of(const std::vector<std::string>& names) {
  std::vector<Member> r;
  for (std::size_t i = 0; i < names.size(); ++i) {
    r.push_back(Member{"id" + std::to_string(i), names[i], i % 2 == 0 ? "D" : "R", ""});
  }
  return r;
}

ScoreVector scores_of(const std::vector<double>& f) {
  ScoreVector s{Eigen::VectorXd(static_cast<Eigen::Index>(f.size())),
                std::vector<bool>(f.size(), false)};
  for (std::size_t i = 0; i < f.size(); ++i) s.f(static_cast<Eigen::Index>(i)) = f[i];
  return s;
}

// Ranking whose order is `order` (names), over roster `roster`.
Ranking ranking_in_order(const std::vector<Member>& roster, const std::vector<std::string>& order) {
  std::vector<double> f(roster.size());
  for (std::size_t i = 0; i < roster.size(); ++i) {
    const auto pos = std::find(order.begin(), order.end(), roster[i].name) - order.begin();
    f[i] = static_cast<double>(static_cast<long>(order.size()) - pos);
  }
  return make_ranking(scores_of(f), roster);
}

std::vector<std::string> names_of(const Ranking& r) {
  std::vector<std::string> out;
  for (const auto& row : r.rows) out.push_back(row.member.name);
  return out;
}

}  // namespace

TEST_CASE("make_ranking") {
  SUBCASE("two members") {
    const auto r = make_ranking(scores_of({1.0, -1.0}), roster_of({"A", "B"}));
    CHECK(names_of(r) == std::vector<std::string>{"A", "B"});
    CHECK(r.rows[0].rank == 1);
    CHECK(r.rows[1].rank == 2);
  }
  SUBCASE("ties by name") {
    const auto r = make_ranking(scores_of({0.5, 0.5}), roster_of({"ZULU", "ALPHA"}));
    CHECK(names_of(r) == std::vector<std::string>{"ALPHA", "ZULU"});
  }
  SUBCASE("ties by name then id") {
    std::vector<Member> roster{{"b", "NELSON", "D", ""}, {"a", "NELSON", "D", ""}};
    const auto r = make_ranking(scores_of({0.1, 0.1}), roster);
    CHECK(r.rows[0].member.id == "a");
  }
  SUBCASE("anchored flag follows the labeled mask") {
    auto s = scores_of({0.0, 1.0, -1.0});
    s.labeled = {false, true, true};
    const auto r = make_ranking(s, roster_of({"A", "B", "C"}));
    CHECK(r.rows[0].anchored);
    CHECK_FALSE(r.rows[1].anchored);
    CHECK(r.rows[2].anchored);
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(make_ranking(scores_of({1.0}), roster_of({"A", "B"})), DimensionError);
  }
}

TEST_CASE("make_ranking invariants on random scores") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coarse(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 30);
    std::vector<std::string> names;
    std::vector<double> f;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(std::string(1, static_cast<char>('A' + coarse(rng) + 3)));
      f.push_back(coarse(rng) / 3.0);
    }
    const auto r = make_ranking(scores_of(f), roster_of(names));
    std::set<std::string> ids;
    for (std::size_t k = 0; k < r.size(); ++k) {
      CHECK(r.rows[k].rank == static_cast<int>(k + 1));
      ids.insert(r.rows[k].member.id);
      if (k > 0) {
        const auto& prev = r.rows[k - 1];
        const auto& cur = r.rows[k];
        CHECK(prev.score >= cur.score);
        if (prev.score == cur.score) {
          CHECK((prev.member.name < cur.member.name ||
                 (prev.member.name == cur.member.name && prev.member.id < cur.member.id)));
        }
      }
    }
    CHECK(ids.size() == n);
  }
}

TEST_CASE("kendall_tau") {
  const auto roster = roster_of({"A", "B", "C", "D", "E"});
  const auto a = ranking_in_order(roster, {"A", "B", "C", "D", "E"});
  const auto rev = ranking_in_order(roster, {"E", "D", "C", "B", "A"});
  CHECK(kendall_tau(a, a) == 1.0);
  CHECK(kendall_tau(a, rev) == -1.0);

  SUBCASE("two discordant pairs") {
    const std::vector<std::string> order_b{"B", "A", "C", "E", "D"};
    const auto b = ranking_in_order(roster, order_b);
    const double expected = oracle::kendall_by_pairs(names_of(a), order_b);
    CHECK(expected == doctest::Approx(0.6));
    CHECK(kendall_tau(a, b) == doctest::Approx(expected).epsilon(1e-15));
  }
  SUBCASE("tie-aware") {
    // x = (3, 2, 1), y = (2, 1, 1): C = 2, D = 0, one tie in y; tau_b = 2 / sqrt(3 * 2).
    const auto r3 = roster_of({"P", "Q", "R"});
    const auto x = make_ranking(scores_of({3, 2, 1}), r3);
    const auto y = make_ranking(scores_of({2, 1, 1}), r3);
    CHECK(kendall_tau(x, y) == doctest::Approx(2.0 / std::sqrt(6.0)));
  }
  SUBCASE("member-set mismatch") {
    auto other = roster;
    other[4].id = "elsewhere";
    CHECK_THROWS_AS(kendall_tau(a, ranking_in_order(other, names_of(a))), InvalidArgumentError);
    CHECK_THROWS_AS(kendall_tau(a, make_ranking(scores_of({1, 0}), roster_of({"A", "B"}))),
                    InvalidArgumentError);
  }
}

TEST_CASE("spearman_rho") {
  const auto roster = roster_of({"A", "B", "C", "D", "E"});
  const auto a = ranking_in_order(roster, {"A", "B", "C", "D", "E"});
  CHECK(spearman_rho(a, a) == doctest::Approx(1.0));
  CHECK(spearman_rho(a, ranking_in_order(roster, {"E", "D", "C", "B", "A"})) ==
        doctest::Approx(-1.0));
  const std::vector<std::string> order_b{"C", "A", "B", "E", "D"};
  const double expected = oracle::spearman_by_rank_difference(names_of(a), order_b);
  CHECK(spearman_rho(a, ranking_in_order(roster, order_b)) ==
        doctest::Approx(expected).epsilon(1e-12));

  SUBCASE("average ranks for ties") {
    // Ranks x = (3, 2, 1), y = (3, 1.5, 1.5): Pearson = 0.8660254037844387.
    const auto r3 = roster_of({"P", "Q", "R"});
    const auto x = make_ranking(scores_of({3, 2, 1}), r3);
    const auto y = make_ranking(scores_of({2, 1, 1}), r3);
    CHECK(spearman_rho(x, y) == doctest::Approx(std::sqrt(3.0) / 2.0));
  }
}

TEST_CASE("correlations are symmetric and relabeling-invariant") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 20);
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = "N" + std::to_string(i);
    std::vector<double> fa(n);
    std::vector<double> fb(n);
    for (std::size_t i = 0; i < n; ++i) {
      fa[i] = u(rng);
      fb[i] = trial % 3 == 0 ? std::round(u(rng) * 2) : u(rng);
    }
    const auto roster = roster_of(names);
    const auto a = make_ranking(scores_of(fa), roster);
    const auto b = make_ranking(scores_of(fb), roster);
    const double tau = kendall_tau(a, b);
    const double rho = spearman_rho(a, b);
    if (std::isnan(tau)) continue;
    CHECK(kendall_tau(b, a) == doctest::Approx(tau).epsilon(1e-12));
    CHECK(spearman_rho(b, a) == doctest::Approx(rho).epsilon(1e-12));
    CHECK(tau >= -1.0 - 1e-12);
    CHECK(tau <= 1.0 + 1e-12);

    // Same permutation applied to both rosters.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Member> roster_p(n);
    std::vector<double> fa_p(n);
    std::vector<double> fb_p(n);
    for (std::size_t i = 0; i < n; ++i) {
      roster_p[i] = roster[perm[i]];
      roster_p[i].name = "X" + std::to_string(perm[i]);
      fa_p[i] = fa[perm[i]];
      fb_p[i] = fb[perm[i]];
    }
    const auto ap = make_ranking(scores_of(fa_p), roster_p);
    const auto bp = make_ranking(scores_of(fb_p), roster_p);
    CHECK(kendall_tau(ap, bp) == doctest::Approx(tau).epsilon(1e-12));
    CHECK(spearman_rho(ap, bp) == doctest::Approx(rho).epsilon(1e-12));
  }
}

TEST_CASE("format_score") {
  CHECK(format_score(0.1234565) == "0.123456");
  CHECK(format_score(0.1234575) == "0.123458");
  CHECK(format_score(0.12345651) == "0.123457");
  CHECK(format_score(0.9999995) == "1.000000");
  CHECK(format_score(1.0) == "1.000000");
  CHECK(format_score(-1.0) == "-1.000000");
  CHECK(format_score(-0.25) == "-0.250000");
  CHECK(format_score(-1e-7) == "0.000000");
  CHECK(format_score(2.5e-7) == "0.000000");
  CHECK(format_score(-0.0000015) == "-0.000002");
  CHECK(format_score(99.9999999) == "100.000000");
}

TEST_CASE("write_ranking") {
  std::vector<Member> roster{{"15703", "FEINGOLD", "D", "WI"}, {"40300", "COBURN", "R", "OK"},
                             {"x", "SMITH, JR", "R", ""}};
  auto s = scores_of({1.0, -1.0, -0.1234565});
  s.labeled = {true, true, false};
  const auto r = make_ranking(s, roster);

  SUBCASE("csv") {
    const auto two = make_ranking(scores_of({1.0, -1.0}), roster_of({"A", "B"}));
    const auto text = write_ranking(two, RankingFormat::Csv);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
    CHECK(write_ranking(r, RankingFormat::Csv) ==
          "rank,id,name,party,score,anchored\n"
          "1,15703,FEINGOLD,D,1.000000,true\n"
          "2,x,\"SMITH, JR\",R,-0.123456,false\n"
          "3,40300,COBURN,R,-1.000000,true\n");
  }
  SUBCASE("text table") {
    CHECK(write_ranking(r, RankingFormat::TextTable) ==
          "Rank  Name       Party\n"
          "1     FEINGOLD   D\n"
          "2     SMITH, JR  R\n"
          "3     COBURN     R\n");
  }
  SUBCASE("json round trip") {
    auto q = scores_of({1.0, -1.0, 0.123456});
    q.labeled = {true, false, true};
    const auto exact = make_ranking(q, roster);
    CHECK(read_ranking_json(write_ranking(exact, RankingFormat::Json)) == exact);
    const auto text = write_ranking(r, RankingFormat::Json);
    CHECK(text.find("\"score\": -0.123456") != std::string::npos);
    CHECK(text == write_ranking(r, RankingFormat::Json));
  }
  SUBCASE("malformed json") { CHECK_THROWS_AS(read_ranking_json("{"), MalformedDataError); }
}
