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

#ifndef RAPIDTAG_ADAPTER_HPP_
#define RAPIDTAG_ADAPTER_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rapidtag/errors.hpp"
#include "rapidtag/freq_table.hpp"
#include "rapidtag/lexicon.hpp"
#include "rapidtag/morphology.hpp"
#include "rapidtag/text_util.hpp"
#include "rapidtag/token.hpp"

namespace rapidtag {

/// Thresholds for the adaptation pipeline. All counts are absolute corpus
/// occurrence counts; the defaults for theta and min_ing_count were chosen
/// on the scale of a corpus of around a million tokens and are plain
/// configuration, not measured constants.
struct AdaptConfig {
  std::uint64_t min_word_count = 3;       // evidence floor for adding a word
  double theta = 5.0;                     // -ing/-ed ratio threshold
  std::uint64_t min_ing_count = 100;      // -ing occurrences needed to decide
  double suffix_confidence_floor = 0.0;   // rules below this never add words
  bool enable_ortho_entries = false;      // write NNP/CD/NN ortho entries

  void validate() const {
    if (min_word_count == 0)
      throw std::invalid_argument("min_word_count must be positive");
    if (theta <= 0.0) throw std::invalid_argument("theta must be positive");
    if (min_ing_count == 0)
      throw std::invalid_argument("min_ing_count must be positive");
    if (suffix_confidence_floor < 0.0 || suffix_confidence_floor > 1.0)
      throw std::invalid_argument("suffix_confidence_floor outside [0,1]");
  }
};

/// Flat key=value config file; '#' starts a comment line, every key is
/// optional, unknown keys are rejected.
inline AdaptConfig parse_adapt_config(std::string_view text) {
  AdaptConfig cfg;
  std::size_t lineno = 0;
  for (std::string_view line : split_lines(text)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected key=value", lineno);
    std::string key(line.substr(0, eq));
    std::string value(line.substr(eq + 1));
    try {
      if (key == "min_word_count") {
        cfg.min_word_count = std::stoull(value);
      } else if (key == "theta") {
        cfg.theta = std::stod(value);
      } else if (key == "min_ing_count") {
        cfg.min_ing_count = std::stoull(value);
      } else if (key == "suffix_confidence_floor") {
        cfg.suffix_confidence_floor = std::stod(value);
      } else if (key == "enable_ortho_entries") {
        if (value == "true" || value == "1")
          cfg.enable_ortho_entries = true;
        else if (value == "false" || value == "0")
          cfg.enable_ortho_entries = false;
        else
          throw ParseError("boolean must be true/false/1/0", lineno);
      } else {
        throw ParseError("unknown config key '" + key + "'", lineno);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad value for '" + key + "'", lineno);
    }
  }
  cfg.validate();
  return cfg;
}

/// One lexicon addition proposed from corpus evidence.
struct ProposedEntry {
  std::string word;
  std::vector<PosTag> tags;
  Provenance provenance = Provenance::kSuffixRule;
  std::string source;        // matched suffix or ortho class name
  std::uint64_t corpus_count = 0;

  friend bool operator==(const ProposedEntry&, const ProposedEntry&) = default;
};

/// Scans the frequency table for words unknown to the (frozen) seed
/// lexicon with enough corpus evidence, and proposes tags for them: a
/// suffix rule at or above the confidence floor first, otherwise an
/// orthographic entry when those are enabled. Output is sorted by word and
/// fully deterministic.
inline std::vector<ProposedEntry> propose_entries(
    const FreqTable& freqs, const Lexicon& lex,
    const std::vector<SuffixRule>& rules, const AdaptConfig& cfg) {
  std::vector<ProposedEntry> out;
  for (const auto& [word, count] : freqs.counts()) {
    if (count < cfg.min_word_count) continue;
    if (lex.lookup(word) != nullptr) continue;
    if (const SuffixRule* rule = match_suffix(word, rules);
        rule != nullptr && rule->confidence >= cfg.suffix_confidence_floor) {
      out.push_back(ProposedEntry{word, rule->tags, Provenance::kSuffixRule,
                                  "-" + rule->suffix, count});
      continue;
    }
    if (cfg.enable_ortho_entries) {
      OrthoClass cls = classify_ortho(word);
      if (auto tags = ortho_tags(cls, word)) {
        out.push_back(ProposedEntry{word, std::move(*tags),
                                    Provenance::kOrtho,
                                    std::string(ortho_class_name(cls)),
                                    count});
      }
    }
  }
  return out;  // freqs.counts() iterates sorted, so out is sorted by word
}

/// Runs the -ing/-ed ratio heuristic over every case-folded -ing form in
/// the frequency table that clears min_ing_count and has a lexicon entry
/// under its lowercase form. Where the noun sense dominates, NN is promoted
/// to the front of that entry. Returns every computed decision, promoted or
/// not, for reporting.
inline std::vector<IngDecision> apply_ing_heuristic(const FreqTable& freqs,
                                                    Lexicon& lex,
                                                    const AdaptConfig& cfg) {
  std::vector<IngDecision> decisions;
  const PosTag noun("NN");
  for (const auto& [folded, count] : freqs.folded_counts()) {
    if (count < cfg.min_ing_count) continue;
    if (folded.size() < 5 || !std::string_view(folded).ends_with("ing"))
      continue;
    if (lex.find(folded) == nullptr) continue;
    IngDecision d = ing_decision(folded, freqs, cfg.theta, cfg.min_ing_count);
    if (d.noun_first) {
      lex.promote_first_tag(folded, noun);
      lex.set_provenance(folded, Provenance::kIngReorder);
    }
    decisions.push_back(std::move(d));
  }
  return decisions;
}

struct AdaptReport {
  std::vector<ProposedEntry> added;
  std::vector<IngDecision> decisions;  // all -ing decisions, both outcomes
  Coverage coverage_before;
  Coverage coverage_after;
  Coverage type_coverage_before;  // auxiliary, by distinct surface form
  Coverage type_coverage_after;
};

/// The full pipeline: count the raw corpus, add suffix/ortho entries for
/// unknown words, then reorder -ing entries, measuring holdout coverage
/// before and after. Suffix additions run first so the heuristic can
/// reorder suffix-added -ing words too. The seed lexicon is never modified;
/// the adapted lexicon only ever gains entries or has NN promoted.
inline std::pair<Lexicon, AdaptReport> adapt(
    const Lexicon& seed, const Document& raw_corpus, const Document& holdout,
    const AdaptConfig& cfg,
    const std::vector<SuffixRule>& rules = default_suffix_rules()) {
  cfg.validate();
  AdaptReport report;
  report.coverage_before = coverage(seed, holdout);
  report.type_coverage_before = coverage_by_type(seed, holdout);

  FreqTable freqs = count_frequencies(raw_corpus);
  Lexicon adapted = seed;
  report.added = propose_entries(freqs, seed, rules, cfg);
  for (const ProposedEntry& p : report.added)
    adapted.add_entry(p.word, p.tags, p.provenance);
  report.decisions = apply_ing_heuristic(freqs, adapted, cfg);

  report.coverage_after = coverage(adapted, holdout);
  report.type_coverage_after = coverage_by_type(adapted, holdout);
  return {std::move(adapted), std::move(report)};
}

/// Adaptation audit TSV: `word<TAB>tags<TAB>provenance` for every added
/// entry and every entry reordered by the -ing heuristic, added rows first,
/// each group sorted by word.
inline std::string adapt_report_tsv(const AdaptReport& report,
                                    const Lexicon& adapted) {
  std::string out;
  const auto append_row = [&](std::string_view word,
                              const std::vector<PosTag>& tags,
                              Provenance provenance) {
    out.append(word);
    out.push_back('\t');
    for (std::size_t i = 0; i < tags.size(); ++i) {
      if (i > 0) out.push_back(' ');
      out.append(tags[i].str());
    }
    out.push_back('\t');
    out.append(provenance_name(provenance));
    out.push_back('\n');
  };
  for (const ProposedEntry& p : report.added)
    append_row(p.word, p.tags, p.provenance);
  for (const IngDecision& d : report.decisions) {
    if (!d.noun_first) continue;
    const LexiconEntry* entry = adapted.find(d.word);
    if (entry != nullptr)
      append_row(d.word, entry->tags, Provenance::kIngReorder);
  }
  return out;
}

/// Human-readable adaptation summary.
inline std::string adapt_summary(const AdaptReport& report) {
  std::uint64_t by_suffix = 0;
  std::uint64_t by_ortho = 0;
  for (const ProposedEntry& p : report.added)
    (p.provenance == Provenance::kSuffixRule ? by_suffix : by_ortho) += 1;
  std::uint64_t reordered = 0;
  for (const IngDecision& d : report.decisions)
    if (d.noun_first) ++reordered;

  std::string out;
  out += "added entries:      " + std::to_string(report.added.size()) +
         " (suffix-rule " + std::to_string(by_suffix) + ", ortho " +
         std::to_string(by_ortho) + ")\n";
  out += "-ing decisions:     " + std::to_string(report.decisions.size()) +
         " (" + std::to_string(reordered) + " promoted NN-first)\n";
  out += "coverage before:    " +
         format_fixed(report.coverage_before.fraction(), 4) + " (" +
         std::to_string(report.coverage_before.hits) + "/" +
         std::to_string(report.coverage_before.tokens) + " tokens)" +
         (report.coverage_before.empty_stream() ? " [empty stream]" : "") +
         "\n";
  out += "coverage after:     " +
         format_fixed(report.coverage_after.fraction(), 4) + " (" +
         std::to_string(report.coverage_after.hits) + "/" +
         std::to_string(report.coverage_after.tokens) + " tokens)" +
         (report.coverage_after.empty_stream() ? " [empty stream]" : "") +
         "\n";
  out += "by-type coverage:   " +
         format_fixed(report.type_coverage_before.fraction(), 4) + " -> " +
         format_fixed(report.type_coverage_after.fraction(), 4) + "\n";
  return out;
}

}  // namespace rapidtag

#endif  // RAPIDTAG_ADAPTER_HPP_
