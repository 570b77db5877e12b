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

#ifndef RAPIDTAG_MORPHOLOGY_HPP_
#define RAPIDTAG_MORPHOLOGY_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rapidtag/errors.hpp"
#include "rapidtag/freq_table.hpp"
#include "rapidtag/pos_tag.hpp"
#include "rapidtag/suffix_rule_data.hpp"
#include "rapidtag/text_util.hpp"

namespace rapidtag {

/// A word-ending pattern carrying the tags it signals for unknown words.
/// `suffix` matches word w iff lowercase(w) ends with it and the stem
/// (w minus suffix) has at least min_stem_length characters; that floor
/// keeps "er" and "or" from matching their own suffixes.
struct SuffixRule {
  std::string suffix;         // lowercase, non-empty
  std::vector<PosTag> tags;   // ordered; tags[0] feeds the initial annotator
  std::size_t min_stem_length = 2;
  double confidence = 1.0;    // in [0,1]

  bool matches(std::string_view lowered_word) const {
    return lowered_word.size() >= suffix.size() + min_stem_length &&
           lowered_word.ends_with(suffix);
  }
};

/// Parses the suffix rule TSV: `suffix<TAB>tag[,tag...]<TAB>min_stem<TAB>
/// confidence`, one rule per line, order significant. Blank lines and lines
/// starting with '#' are skipped.
inline std::vector<SuffixRule> parse_suffix_rules(std::string_view text) {
  std::vector<SuffixRule> rules;
  std::size_t lineno = 0;
  for (std::string_view line : split_lines(text)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> fields = split(line, '\t');
    if (fields.size() != 4)
      throw ParseError("expected 4 tab-separated fields", lineno);
    SuffixRule rule;
    rule.suffix = std::string(fields[0]);
    if (rule.suffix.empty())
      throw ParseError("empty suffix", lineno);
    for (char c : rule.suffix)
      if (!is_ascii_lower(c))
        throw ParseError("suffix must be lowercase letters", lineno);
    for (std::string_view t : split(fields[1], ',')) {
      if (!PosTag::valid_symbol(t))
        throw ParseError("invalid tag symbol '" + std::string(t) + "'",
                         lineno);
      rule.tags.emplace_back(std::string(t));
    }
    if (rule.tags.empty()) throw ParseError("no tags", lineno);
    try {
      std::size_t used = 0;
      rule.min_stem_length = std::stoul(std::string(fields[2]), &used);
      if (used != fields[2].size()) throw std::invalid_argument("");
      used = 0;
      rule.confidence = std::stod(std::string(fields[3]), &used);
      if (used != fields[3].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("bad numeric field", lineno);
    }
    if (rule.min_stem_length == 0)
      throw ParseError("min_stem_length must be positive", lineno);
    if (rule.confidence < 0.0 || rule.confidence > 1.0)
      throw ParseError("confidence outside [0,1]", lineno);
    rules.push_back(std::move(rule));
  }
  return rules;
}

inline std::string serialize_suffix_rules(const std::vector<SuffixRule>& rules) {
  std::string out;
  for (const SuffixRule& r : rules) {
    out.append(r.suffix);
    out.push_back('\t');
    for (std::size_t i = 0; i < r.tags.size(); ++i) {
      if (i > 0) out.push_back(',');
      out.append(r.tags[i].str());
    }
    out.push_back('\t');
    out.append(std::to_string(r.min_stem_length));
    out.push_back('\t');
    out.append(format_fixed(r.confidence, 3));
    out.push_back('\n');
  }
  return out;
}

/// The built-in rule set (identical to data/suffix_rules.tsv).
inline const std::vector<SuffixRule>& default_suffix_rules() {
  static const std::vector<SuffixRule> rules =
      parse_suffix_rules(kDefaultSuffixRulesTsv);
  return rules;
}

/// Longest-suffix match, case-insensitive; ties go to the earlier rule in
/// list order. nullptr when nothing matches.
inline const SuffixRule* match_suffix(std::string_view word,
                                      const std::vector<SuffixRule>& rules) {
  if (word.empty()) throw std::invalid_argument("match_suffix: empty word");
  const std::string lowered = to_lower_ascii(word);
  const SuffixRule* best = nullptr;
  for (const SuffixRule& rule : rules) {
    if (!rule.matches(lowered)) continue;
    if (best == nullptr || rule.suffix.size() > best->suffix.size())
      best = &rule;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Orthographic classes
// ---------------------------------------------------------------------------

enum class OrthoClass { kProperNounLike, kNumberOrCode, kPlain };

inline std::string_view ortho_class_name(OrthoClass c) {
  switch (c) {
    case OrthoClass::kProperNounLike:
      return "proper-noun-like";
    case OrthoClass::kNumberOrCode:
      return "number-or-code";
    case OrthoClass::kPlain:
      return "plain";
  }
  return "unknown";
}

namespace detail {
inline bool is_numeric_shape_char(char c) {
  return is_ascii_digit(c) || c == '.' || c == ',' || c == '-' || c == '+' ||
         c == '%';
}
}  // namespace detail

/// Total, deterministic shape classification of a non-empty token:
/// NumberOrCode when it contains a digit or consists solely of
/// digits/./,/-/+/%; ProperNounLike when it is an uppercase letter followed
/// by all-lowercase letters (length >= 2); Plain otherwise.
inline OrthoClass classify_ortho(std::string_view token) {
  if (token.empty())
    throw std::invalid_argument("classify_ortho: empty token");
  bool has_digit = false;
  bool all_numeric_shape = true;
  for (char c : token) {
    if (is_ascii_digit(c)) has_digit = true;
    if (!detail::is_numeric_shape_char(c)) all_numeric_shape = false;
  }
  if (has_digit || all_numeric_shape) return OrthoClass::kNumberOrCode;
  if (token.size() >= 2 && is_ascii_upper(token.front())) {
    bool rest_lower = true;
    for (std::size_t i = 1; i < token.size(); ++i)
      if (!is_ascii_lower(token[i])) {
        rest_lower = false;
        break;
      }
    if (rest_lower) return OrthoClass::kProperNounLike;
  }
  return OrthoClass::kPlain;
}

/// Tags implied by an orthographic class: NNP for proper-noun shapes, CD
/// for pure number shapes, NN for alphanumeric codes (IL-2), nothing for
/// plain tokens.
inline std::optional<std::vector<PosTag>> ortho_tags(OrthoClass cls,
                                                     std::string_view token) {
  switch (cls) {
    case OrthoClass::kProperNounLike:
      return std::vector<PosTag>{PosTag("NNP")};
    case OrthoClass::kNumberOrCode: {
      bool pure_number = true;
      for (char c : token)
        if (!detail::is_numeric_shape_char(c)) {
          pure_number = false;
          break;
        }
      return std::vector<PosTag>{pure_number ? PosTag("CD") : PosTag("NN")};
    }
    case OrthoClass::kPlain:
      return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// -ing / -ed ratio heuristic
// ---------------------------------------------------------------------------

/// Outcome of the -ing/-ed frequency comparison for one word. When the
/// -ing form is frequent and heavily outnumbers its -ed counterparts, the
/// nominal sense dominates and NN belongs first in the lexicon entry.
struct IngDecision {
  std::string word;  // case-folded -ing form examined
  std::uint64_t ing_count = 0;
  std::uint64_t ed_count = 0;
  double ratio = 0.0;  // ing_count / max(ed_count, 1)
  bool noun_first = false;
};

namespace detail {
inline bool is_consonant(char c) {
  return is_ascii_lower(c) && c != 'a' && c != 'e' && c != 'i' && c != 'o' &&
         c != 'u';
}
}  // namespace detail

/// Counts are case-insensitive sums over all casings. The -ed candidates
/// are stem+"ed" and, when the stem ends in a doubled consonant, the
/// undoubled stem+"ed" as well (signalling -> signalled and signaled).
/// Throws std::invalid_argument unless lowercase(word) ends in "ing" with
/// total length >= 5.
inline IngDecision ing_decision(std::string_view word, const FreqTable& freqs,
                                double theta, std::uint64_t min_ing_count) {
  IngDecision d;
  d.word = to_lower_ascii(word);
  if (!d.word.ends_with("ing"))
    throw std::invalid_argument("ing_decision: '" + d.word +
                                "' does not end in -ing");
  if (d.word.size() < 5)
    throw std::invalid_argument("ing_decision: '" + d.word + "' too short");

  d.ing_count = freqs.count_folded(d.word);
  const std::string stem = d.word.substr(0, d.word.size() - 3);
  d.ed_count = freqs.count_folded(stem + "ed");
  const std::size_t n = stem.size();
  if (n >= 2 && stem[n - 1] == stem[n - 2] &&
      detail::is_consonant(stem[n - 1])) {
    d.ed_count += freqs.count_folded(stem.substr(0, n - 1) + "ed");
  }
  d.ratio = static_cast<double>(d.ing_count) /
            static_cast<double>(std::max<std::uint64_t>(d.ed_count, 1));
  d.noun_first = d.ing_count >= min_ing_count && d.ratio >= theta;
  return d;
}

}  // namespace rapidtag

#endif  // RAPIDTAG_MORPHOLOGY_HPP_
