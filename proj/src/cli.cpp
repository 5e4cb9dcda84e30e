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

#include "senrank/cli.hpp"

#include "senrank/error.hpp"
#include "senrank/pipeline.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace senrank {

namespace {

struct InputOptions {
  std::string path;
  std::string format;
  double threshold = 0.95;
};

void add_input_options(CLI::App& cmd, InputOptions& opts) {
  cmd.add_option("--input", opts.path, "Vote file (CSV or legacy .ord)")->required();
  cmd.add_option("--format", opts.format, "Input format; inferred from the extension if omitted")
      ->check(CLI::IsMember({"csv", "ord"}));
  cmd.add_option("--filter-threshold", opts.threshold,
                 "Drop roll calls whose majority share of cast votes exceeds this")
      ->capture_default_str();
}

struct Prepared {
  VoteMatrix votes;
  WeightMatrix weights;
};

Prepared prepare(const InputOptions& opts) {
  std::optional<InputFormat> format;
  if (opts.format == "csv") format = InputFormat::Csv;
  if (opts.format == "ord") format = InputFormat::Ord;
  VoteMatrix votes = filter_near_unanimous(load_votes(opts.path, format), opts.threshold);
  WeightMatrix weights = similarity_matrix(votes);
  return Prepared{std::move(votes), std::move(weights)};
}

RankingFormat ranking_format(const std::string& name) {
  if (name == "csv") return RankingFormat::Csv;
  if (name == "json") return RankingFormat::Json;
  return RankingFormat::TextTable;
}

AnchorPolicy policy_from(const std::vector<std::string>& texts, bool automatic,
                         const std::string& orient) {
  AnchorPolicy policy;
  policy.automatic = automatic;
  for (const auto& t : texts) policy.named.push_back(parse_anchor_spec(t));
  if (!orient.empty()) policy.orient = orient;
  return policy;
}

// "auto" selects the least-similar pair; otherwise every value is NAME_OR_ID=SCORE.
AnchorPolicy policy_from_list(const std::vector<std::string>& texts, const std::string& orient) {
  if (texts.size() == 1 && texts.front() == "auto") return policy_from({}, true, orient);
  return policy_from(texts, false, orient);
}

void report_anchors(const RankResult& result, const VoteMatrix& votes, const std::string& label,
                    std::ostream& err) {
  if (!result.internal) return;
  const auto& pos = votes.roster()[static_cast<std::size_t>(result.internal->positive)];
  const auto& neg = votes.roster()[static_cast<std::size_t>(result.internal->negative)];
  err << label << "least-similar pair: " << pos.name << " (id " << pos.id << ") = +1, "
      << neg.name << " (id " << neg.id << ") = -1"
      << (result.internal->orientation_arbitrary ? " [orientation arbitrary]" : "") << '\n';
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw ValidationError("cannot open output file '" + out_path + "'");
  file << text;
}

std::string compare_report(const Ranking& a, const Ranking& b, const std::string& output) {
  const double tau = kendall_tau(a, b);
  const double rho = spearman_rho(a, b);
  std::ostringstream s;
  if (output == "json") {
    s << "{\n\"ranking_a\": " << write_ranking(a, RankingFormat::Json)
      << ",\n\"ranking_b\": " << write_ranking(b, RankingFormat::Json)
      << ",\n\"kendall_tau\": " << format_score(tau) << ",\n\"spearman_rho\": " << format_score(rho)
      << "\n}\n";
  } else {
    const RankingFormat fmt = ranking_format(output);
    s << "# ranking A\n" << write_ranking(a, fmt) << "# ranking B\n" << write_ranking(b, fmt);
    s << "kendall_tau " << format_score(tau) << "\nspearman_rho " << format_score(rho) << '\n';
  }
  return s.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank voters on a one-dimensional scale from their roll-call records"};
  app.require_subcommand(1);

  InputOptions rank_in;
  std::vector<std::string> rank_anchors;
  bool auto_anchors = false;
  std::string orient;
  std::string rank_output = "text";
  std::string dump_weights;
  std::string rank_out;
  auto* rank = app.add_subcommand("rank", "Rank all members of a vote file");
  add_input_options(*rank, rank_in);
  auto* anchor_opt = rank->add_option("--anchor", rank_anchors, "Fixed score, NAME_OR_ID=SCORE")
                         ->allow_extra_args(false);
  auto* auto_opt = rank->add_flag("--auto-anchors", auto_anchors,
                                  "Anchor the least similar pair at +1 and -1");
  rank->add_option("--orient", orient, "Member of the detected pair that receives +1")
      ->needs(auto_opt);
  anchor_opt->excludes(auto_opt);
  rank->add_option("--output", rank_output)->check(CLI::IsMember({"text", "csv", "json"}));
  rank->add_option("--dump-weights", dump_weights, "Write the weight matrix as CSV");
  rank->add_option("--out", rank_out, "Write the ranking to a file instead of stdout");

  InputOptions cmp_in;
  std::vector<std::string> anchors_a;
  std::vector<std::string> anchors_b;
  std::string orient_a;
  std::string orient_b;
  std::string cmp_output = "text";
  std::string cmp_out;
  auto* compare = app.add_subcommand("compare", "Rank with two anchor choices and correlate them");
  add_input_options(*compare, cmp_in);
  compare->add_option("--anchors-a", anchors_a, "NAME_OR_ID=SCORE ... or 'auto'")->required();
  compare->add_option("--anchors-b", anchors_b, "NAME_OR_ID=SCORE ... or 'auto'")->required();
  compare->add_option("--orient-a", orient_a);
  compare->add_option("--orient-b", orient_b);
  compare->add_option("--output", cmp_output)->check(CLI::IsMember({"text", "csv", "json"}));
  compare->add_option("--out", cmp_out);

  int per_bloc = 25;
  int rollcalls = 60;
  double flip = 0.1;
  std::uint64_t seed = 0;
  std::string synth_out;
  auto* synth = app.add_subcommand("synth", "Write a synthetic two-bloc vote file as CSV");
  synth->add_option("--per-bloc", per_bloc)->capture_default_str();
  synth->add_option("--rollcalls", rollcalls)->capture_default_str();
  synth->add_option("--flip", flip)->capture_default_str();
  synth->add_option("--seed", seed)->capture_default_str();
  synth->add_option("--out", synth_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (rank->parsed()) {
      if (rank_anchors.empty() && !auto_anchors) {
        throw InvalidArgumentError("rank needs --anchor NAME_OR_ID=SCORE (at least two) or --auto-anchors");
      }
      const Prepared data = prepare(rank_in);
      if (!dump_weights.empty()) {
        std::ofstream file(dump_weights, std::ios::binary | std::ios::trunc);
        if (!file) throw ValidationError("cannot open '" + dump_weights + "'");
        write_weights_csv(data.weights, data.votes.roster(), file);
      }
      const RankResult result =
          rank_members(data.votes, data.weights, policy_from(rank_anchors, auto_anchors, orient));
      report_anchors(result, data.votes, "", err);
      emit(write_ranking(result.ranking, ranking_format(rank_output)), rank_out, out);
    } else if (compare->parsed()) {
      const Prepared data = prepare(cmp_in);
      const RankResult a =
          rank_members(data.votes, data.weights, policy_from_list(anchors_a, orient_a));
      const RankResult b =
          rank_members(data.votes, data.weights, policy_from_list(anchors_b, orient_b));
      report_anchors(a, data.votes, "A: ", err);
      report_anchors(b, data.votes, "B: ", err);
      emit(compare_report(a.ranking, b.ranking, cmp_output), cmp_out, out);
    } else if (synth->parsed()) {
      std::ostringstream s;
      write_csv(generate_synthetic(per_bloc, rollcalls, flip, seed), s);
      emit(s.str(), synth_out, out);
    }
  } catch (const SingularSystemError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace senrank
