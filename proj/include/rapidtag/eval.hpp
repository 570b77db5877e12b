// Copyright 2026 The rapidtag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RAPIDTAG_EVAL_HPP_
#define RAPIDTAG_EVAL_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rapidtag/errors.hpp"
#include "rapidtag/pos_tag.hpp"
#include "rapidtag/text_util.hpp"
#include "rapidtag/token.hpp"

namespace rapidtag {

/// Folds the proper-noun distinction away: NNP -> NN, NNPS -> NNS, all
/// other tags unchanged. Idempotent. Used when the gold annotation does not
/// distinguish common from proper nouns.
inline PosTag collapse_tag(const PosTag& tag) {
  if (tag.str() == "NNP") return PosTag("NN");
  if (tag.str() == "NNPS") return PosTag("NNS");
  return tag;
}

struct EvalReport {
  std::uint64_t token_count = 0;
  std::uint64_t correct_count = 0;
  double accuracy = 0.0;
  std::optional<double> coverage;  // set by callers that hold a lexicon
  // (gold tag, predicted tag) -> count, keyed on the compared (possibly
  // collapsed) symbols; cells sum to token_count.
  std::map<std::pair<std::string, std::string>, std::uint64_t> confusion;
  // gold tag -> (correct, total)
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> per_tag;

  double per_tag_accuracy(const std::string& tag) const {
    auto it = per_tag.find(tag);
    if (it == per_tag.end() || it->second.second == 0) return 0.0;
    return static_cast<double>(it->second.first) /
           static_cast<double>(it->second.second);
  }
};

/// Scores predicted against gold. Alignment is strict: sentence counts,
/// sentence lengths, and token surfaces must agree exactly, otherwise an
/// AlignmentError identifies the first divergent position. With
/// collapse=true both sides are collapsed before comparison.
inline EvalReport score(const TaggedDocument& gold,
                        const TaggedDocument& predicted, bool collapse) {
  if (gold.size() != predicted.size())
    throw AlignmentError("sentence counts differ (" +
                             std::to_string(gold.size()) + " vs " +
                             std::to_string(predicted.size()) + ")",
                         std::min(gold.size(), predicted.size()), 0);
  EvalReport report;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].size() != predicted[s].size())
      throw AlignmentError("sentence lengths differ (" +
                               std::to_string(gold[s].size()) + " vs " +
                               std::to_string(predicted[s].size()) + ")",
                           s, std::min(gold[s].size(), predicted[s].size()));
    for (std::size_t i = 0; i < gold[s].size(); ++i) {
      if (gold[s][i].token.surface != predicted[s][i].token.surface)
        throw AlignmentError("surfaces differ ('" +
                                 gold[s][i].token.surface + "' vs '" +
                                 predicted[s][i].token.surface + "')",
                             s, i);
      PosTag g = collapse ? collapse_tag(gold[s][i].tag) : gold[s][i].tag;
      PosTag p = collapse ? collapse_tag(predicted[s][i].tag)
                          : predicted[s][i].tag;
      ++report.token_count;
      bool correct = (g == p);
      if (correct) ++report.correct_count;
      ++report.confusion[{g.str(), p.str()}];
      auto& [tag_correct, tag_total] = report.per_tag[g.str()];
      ++tag_total;
      if (correct) ++tag_correct;
    }
  }
  report.accuracy =
      report.token_count == 0
          ? 0.0
          : static_cast<double>(report.correct_count) /
                static_cast<double>(report.token_count);
  return report;
}

/// Fraction of remaining errors eliminated: (new - base) / (1 - base).
/// A perfect baseline makes the quotient undefined; that case yields 0
/// with the degenerate flag set.
struct ErrorReduction {
  double value = 0.0;
  bool degenerate = false;
};

inline ErrorReduction error_reduction(double base_accuracy,
                                      double new_accuracy) {
  if (base_accuracy == 1.0) return {0.0, true};
  return {(new_accuracy - base_accuracy) / (1.0 - base_accuracy), false};
}

/// Machine-readable report: `metric<TAB>value` lines.
inline std::string eval_report_tsv(
    const EvalReport& report,
    const std::optional<ErrorReduction>& reduction = std::nullopt) {
  std::string out;
  out += "token_count\t" + std::to_string(report.token_count) + "\n";
  out += "correct_count\t" + std::to_string(report.correct_count) + "\n";
  out += "accuracy\t" + format_fixed(report.accuracy, 6) + "\n";
  if (report.coverage)
    out += "coverage\t" + format_fixed(*report.coverage, 6) + "\n";
  if (reduction)
    out += "error_reduction\t" + format_fixed(reduction->value, 6) + "\n";
  return out;
}

/// Human-readable summary: headline numbers, per-tag accuracy, and the
/// most frequent confusion cells.
inline std::string eval_summary(const EvalReport& report,
                                std::size_t max_confusions = 10) {
  std::string out;
  out += "tokens    " + std::to_string(report.token_count) + "\n";
  out += "correct   " + std::to_string(report.correct_count) + "\n";
  out += "accuracy  " + format_fixed(report.accuracy, 4) + "\n";
  if (report.coverage)
    out += "coverage  " + format_fixed(*report.coverage, 4) + "\n";
  if (!report.per_tag.empty()) {
    out += "per-tag accuracy:\n";
    for (const auto& [tag, counts] : report.per_tag) {
      out += "  " + tag + "\t" +
             format_fixed(report.per_tag_accuracy(tag), 4) + "\t(" +
             std::to_string(counts.first) + "/" +
             std::to_string(counts.second) + ")\n";
    }
  }
  std::vector<std::pair<std::pair<std::string, std::string>, std::uint64_t>>
      off_diagonal;
  for (const auto& [cell, n] : report.confusion)
    if (cell.first != cell.second) off_diagonal.emplace_back(cell, n);
  std::sort(off_diagonal.begin(), off_diagonal.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  if (!off_diagonal.empty()) {
    out += "top confusions (gold -> predicted):\n";
    for (std::size_t i = 0;
         i < off_diagonal.size() && i < max_confusions; ++i) {
      out += "  " + off_diagonal[i].first.first + " -> " +
             off_diagonal[i].first.second + "\t" +
             std::to_string(off_diagonal[i].second) + "\n";
    }
  }
  return out;
}

}  // namespace rapidtag

#endif  // RAPIDTAG_EVAL_HPP_
