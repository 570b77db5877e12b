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

#ifndef RAPIDTAG_TBL_HPP_
#define RAPIDTAG_TBL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rapidtag/errors.hpp"
#include "rapidtag/lexicon.hpp"
#include "rapidtag/morphology.hpp"
#include "rapidtag/pos_tag.hpp"
#include "rapidtag/text_util.hpp"
#include "rapidtag/token.hpp"

namespace rapidtag {

// ---------------------------------------------------------------------------
// Contextual rules
// ---------------------------------------------------------------------------

/// Context predicates for rewrite rules. Tag templates test already-
/// rewritten tags; word templates test surfaces exactly (case-sensitive).
enum class RuleTemplate {
  kPrevTag,         // previous tag is arg1
  kNextTag,         // next tag is arg1
  kPrev1Or2Tag,     // one of the two previous tags is arg1
  kNext1Or2Tag,     // one of the two next tags is arg1
  kSurroundTag,     // previous tag is arg1 and next tag is arg2
  kPrevWord,        // previous word is arg1
  kNextWord,        // next word is arg1
  kCurWordPrevTag,  // current word is arg1 and previous tag is arg2
};

inline constexpr RuleTemplate kAllRuleTemplates[] = {
    RuleTemplate::kPrevTag,     RuleTemplate::kNextTag,
    RuleTemplate::kPrev1Or2Tag, RuleTemplate::kNext1Or2Tag,
    RuleTemplate::kSurroundTag, RuleTemplate::kPrevWord,
    RuleTemplate::kNextWord,    RuleTemplate::kCurWordPrevTag,
};

inline std::string_view template_name(RuleTemplate t) {
  switch (t) {
    case RuleTemplate::kPrevTag:
      return "PREVTAG";
    case RuleTemplate::kNextTag:
      return "NEXTTAG";
    case RuleTemplate::kPrev1Or2Tag:
      return "PREV1OR2TAG";
    case RuleTemplate::kNext1Or2Tag:
      return "NEXT1OR2TAG";
    case RuleTemplate::kSurroundTag:
      return "SURROUNDTAG";
    case RuleTemplate::kPrevWord:
      return "PREVWORD";
    case RuleTemplate::kNextWord:
      return "NEXTWORD";
    case RuleTemplate::kCurWordPrevTag:
      return "CURWORD_PREVTAG";
  }
  return "UNKNOWN";
}

inline std::optional<RuleTemplate> template_from_name(std::string_view name) {
  for (RuleTemplate t : kAllRuleTemplates)
    if (template_name(t) == name) return t;
  return std::nullopt;
}

inline std::size_t template_arity(RuleTemplate t) {
  return (t == RuleTemplate::kSurroundTag ||
          t == RuleTemplate::kCurWordPrevTag)
             ? 2
             : 1;
}

/// "Change from_tag to to_tag when the template predicate holds."
struct ContextualRule {
  PosTag from_tag;
  PosTag to_tag;
  RuleTemplate tmpl;
  std::string arg1;
  std::string arg2;  // empty unless arity 2

  ContextualRule(PosTag from, PosTag to, RuleTemplate t, std::string a1,
                 std::string a2 = "")
      : from_tag(std::move(from)),
        to_tag(std::move(to)),
        tmpl(t),
        arg1(std::move(a1)),
        arg2(std::move(a2)) {
    if (from_tag == to_tag)
      throw std::invalid_argument("contextual rule: from_tag equals to_tag");
    if ((template_arity(tmpl) == 2) != !arg2.empty())
      throw std::invalid_argument("contextual rule: argument arity mismatch");
  }

  friend bool operator==(const ContextualRule&, const ContextualRule&) =
      default;
};

using RuleList = std::vector<ContextualRule>;

inline std::string serialize_rule(const ContextualRule& r) {
  std::string out = r.from_tag.str();
  out.push_back(' ');
  out.append(r.to_tag.str());
  out.push_back(' ');
  out.append(template_name(r.tmpl));
  out.push_back(' ');
  out.append(r.arg1);
  if (!r.arg2.empty()) {
    out.push_back(' ');
    out.append(r.arg2);
  }
  return out;
}

/// One rule per line: `FROM TO TEMPLATE ARG1 [ARG2]`, space-separated, LF,
/// line order preserved (it is the application order).
inline std::string serialize_rules(const RuleList& rules) {
  std::string out;
  for (const ContextualRule& r : rules) {
    out.append(serialize_rule(r));
    out.push_back('\n');
  }
  return out;
}

inline RuleList parse_rules(std::string_view text) {
  RuleList rules;
  std::size_t lineno = 0;
  for (std::string_view line : split_lines(text)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string_view> fields = split(line, ' ');
    if (fields.size() < 4)
      throw ParseError("expected 'FROM TO TEMPLATE ARG1 [ARG2]'", lineno);
    for (std::string_view f : fields)
      if (f.empty()) throw ParseError("empty field (double space?)", lineno);
    if (!PosTag::valid_symbol(fields[0]))
      throw ParseError("invalid from-tag '" + std::string(fields[0]) + "'",
                       lineno);
    if (!PosTag::valid_symbol(fields[1]))
      throw ParseError("invalid to-tag '" + std::string(fields[1]) + "'",
                       lineno);
    std::optional<RuleTemplate> tmpl = template_from_name(fields[2]);
    if (!tmpl)
      throw ParseError("unknown template '" + std::string(fields[2]) + "'",
                       lineno);
    std::size_t arity = template_arity(*tmpl);
    if (fields.size() != 3 + arity)
      throw ParseError("template " + std::string(fields[2]) + " takes " +
                           std::to_string(arity) + " argument(s)",
                       lineno);
    // Tag-valued arguments must be valid tag symbols.
    const bool arg1_is_tag = (*tmpl == RuleTemplate::kPrevTag ||
                              *tmpl == RuleTemplate::kNextTag ||
                              *tmpl == RuleTemplate::kPrev1Or2Tag ||
                              *tmpl == RuleTemplate::kNext1Or2Tag ||
                              *tmpl == RuleTemplate::kSurroundTag);
    const bool arg2_is_tag = (*tmpl == RuleTemplate::kSurroundTag ||
                              *tmpl == RuleTemplate::kCurWordPrevTag);
    if (arg1_is_tag && !PosTag::valid_symbol(fields[3]))
      throw ParseError("invalid tag argument '" + std::string(fields[3]) + "'",
                       lineno);
    if (arity == 2 && arg2_is_tag && !PosTag::valid_symbol(fields[4]))
      throw ParseError("invalid tag argument '" + std::string(fields[4]) + "'",
                       lineno);
    if (fields[0] == fields[1])
      throw ParseError("from-tag equals to-tag", lineno);
    rules.emplace_back(PosTag(std::string(fields[0])),
                       PosTag(std::string(fields[1])), *tmpl,
                       std::string(fields[3]),
                       arity == 2 ? std::string(fields[4]) : "");
  }
  return rules;
}

// ---------------------------------------------------------------------------
// Rule application
// ---------------------------------------------------------------------------

namespace detail {

inline bool rule_context_holds(const ContextualRule& r,
                               const TaggedSentence& sent, std::size_t i) {
  const std::size_t n = sent.size();
  const auto tag_is = [&](std::size_t pos, const std::string& sym) {
    return sent[pos].tag.str() == sym;
  };
  switch (r.tmpl) {
    case RuleTemplate::kPrevTag:
      return i >= 1 && tag_is(i - 1, r.arg1);
    case RuleTemplate::kNextTag:
      return i + 1 < n && tag_is(i + 1, r.arg1);
    case RuleTemplate::kPrev1Or2Tag:
      return (i >= 1 && tag_is(i - 1, r.arg1)) ||
             (i >= 2 && tag_is(i - 2, r.arg1));
    case RuleTemplate::kNext1Or2Tag:
      return (i + 1 < n && tag_is(i + 1, r.arg1)) ||
             (i + 2 < n && tag_is(i + 2, r.arg1));
    case RuleTemplate::kSurroundTag:
      return i >= 1 && i + 1 < n && tag_is(i - 1, r.arg1) &&
             tag_is(i + 1, r.arg2);
    case RuleTemplate::kPrevWord:
      return i >= 1 && sent[i - 1].token.surface == r.arg1;
    case RuleTemplate::kNextWord:
      return i + 1 < n && sent[i + 1].token.surface == r.arg1;
    case RuleTemplate::kCurWordPrevTag:
      return i >= 1 && sent[i].token.surface == r.arg1 &&
             tag_is(i - 1, r.arg2);
  }
  return false;
}

}  // namespace detail

/// Left-to-right scan with immediate update: a rewrite at position i is
/// visible to context predicates at positions > i, so changes can cascade
/// within a single pass. Positions whose required context falls outside the
/// sentence never match.
inline void apply_rule_in_place(const ContextualRule& rule,
                                TaggedSentence& sent) {
  for (std::size_t i = 0; i < sent.size(); ++i) {
    if (sent[i].tag != rule.from_tag) continue;
    if (detail::rule_context_holds(rule, sent, i)) sent[i].tag = rule.to_tag;
  }
}

inline TaggedSentence apply_rule(const ContextualRule& rule,
                                 TaggedSentence sent) {
  apply_rule_in_place(rule, sent);
  return sent;
}

// ---------------------------------------------------------------------------
// Initial-state annotation and tagging
// ---------------------------------------------------------------------------

/// First-pass tag assignment: the first tag of the lexicon entry when the
/// lookup succeeds, otherwise the unknown-word chain: orthographic shape
/// (NNP only off sentence-initial position, CD/NN for number-or-code), then
/// longest suffix match, then NN.
inline TaggedSentence initial_annotate(
    const Sentence& sentence, const Lexicon& lex,
    const std::vector<SuffixRule>& suffix_rules = default_suffix_rules()) {
  TaggedSentence out;
  out.reserve(sentence.size());
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    const Token& tok = sentence[i];
    if (const std::vector<PosTag>* tags = lex.lookup(tok.surface)) {
      out.push_back(TaggedToken{tok, tags->front()});
      continue;
    }
    OrthoClass cls = classify_ortho(tok.surface);
    // Sentence-initial capitalization is uninformative, so a proper-noun
    // shape in first position falls through to the suffix rules.
    if (cls == OrthoClass::kNumberOrCode ||
        (cls == OrthoClass::kProperNounLike && i != 0)) {
      out.push_back(TaggedToken{tok, ortho_tags(cls, tok.surface)->front()});
      continue;
    }
    if (const SuffixRule* rule = match_suffix(tok.surface, suffix_rules)) {
      out.push_back(TaggedToken{tok, rule->tags.front()});
      continue;
    }
    out.push_back(TaggedToken{tok, PosTag("NN")});
  }
  return out;
}

inline TaggedSentence tag_sentence(
    const Sentence& sentence, const Lexicon& lex, const RuleList& rules,
    const std::vector<SuffixRule>& suffix_rules = default_suffix_rules()) {
  TaggedSentence tagged = initial_annotate(sentence, lex, suffix_rules);
  for (const ContextualRule& rule : rules) apply_rule_in_place(rule, tagged);
  return tagged;
}

inline TaggedDocument tag_document(
    const Document& doc, const Lexicon& lex, const RuleList& rules,
    const std::vector<SuffixRule>& suffix_rules = default_suffix_rules()) {
  TaggedDocument out;
  out.reserve(doc.size());
  for (const Sentence& sent : doc)
    out.push_back(tag_sentence(sent, lex, rules, suffix_rules));
  return out;
}

// ---------------------------------------------------------------------------
// Greedy rule training
// ---------------------------------------------------------------------------

struct TrainStep {
  ContextualRule rule;
  std::int64_t score;  // corrections minus new errors on the working corpus
  std::uint64_t errors_before;
  std::uint64_t errors_after;
};

struct TrainResult {
  RuleList rules;
  std::vector<TrainStep> steps;
};

namespace detail {

inline std::uint64_t count_errors(const TaggedDocument& working,
                                  const TaggedDocument& gold) {
  std::uint64_t errors = 0;
  for (std::size_t s = 0; s < working.size(); ++s)
    for (std::size_t i = 0; i < working[s].size(); ++i)
      if (working[s][i].tag != gold[s][i].tag) ++errors;
  return errors;
}

// Score = (positions corrected) - (positions broken) after applying the
// rule with the engine's own immediate-update semantics.
inline std::int64_t score_candidate(const ContextualRule& rule,
                                    const TaggedDocument& working,
                                    const TaggedDocument& gold) {
  std::int64_t score = 0;
  for (std::size_t s = 0; s < working.size(); ++s) {
    TaggedSentence sent = working[s];
    apply_rule_in_place(rule, sent);
    for (std::size_t i = 0; i < sent.size(); ++i) {
      if (sent[i].tag == working[s][i].tag) continue;
      if (sent[i].tag == gold[s][i].tag)
        ++score;
      else if (working[s][i].tag == gold[s][i].tag)
        --score;
    }
  }
  return score;
}

inline void propose_candidates(const TaggedDocument& working,
                               const TaggedDocument& gold,
                               const std::vector<RuleTemplate>& templates,
                               std::map<std::string, ContextualRule>* out) {
  for (std::size_t s = 0; s < working.size(); ++s) {
    const TaggedSentence& w = working[s];
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i].tag == gold[s][i].tag) continue;
      const PosTag& from = w[i].tag;
      const PosTag& to = gold[s][i].tag;
      const auto add = [&](RuleTemplate t, std::string a1,
                           std::string a2 = "") {
        ContextualRule rule(from, to, t, std::move(a1), std::move(a2));
        std::string key = serialize_rule(rule);
        out->try_emplace(std::move(key), std::move(rule));
      };
      for (RuleTemplate t : templates) {
        switch (t) {
          case RuleTemplate::kPrevTag:
            if (i >= 1) add(t, w[i - 1].tag.str());
            break;
          case RuleTemplate::kNextTag:
            if (i + 1 < n) add(t, w[i + 1].tag.str());
            break;
          case RuleTemplate::kPrev1Or2Tag:
            if (i >= 1) add(t, w[i - 1].tag.str());
            if (i >= 2) add(t, w[i - 2].tag.str());
            break;
          case RuleTemplate::kNext1Or2Tag:
            if (i + 1 < n) add(t, w[i + 1].tag.str());
            if (i + 2 < n) add(t, w[i + 2].tag.str());
            break;
          case RuleTemplate::kSurroundTag:
            if (i >= 1 && i + 1 < n)
              add(t, w[i - 1].tag.str(), w[i + 1].tag.str());
            break;
          case RuleTemplate::kPrevWord:
            if (i >= 1) add(t, w[i - 1].token.surface);
            break;
          case RuleTemplate::kNextWord:
            if (i + 1 < n) add(t, w[i + 1].token.surface);
            break;
          case RuleTemplate::kCurWordPrevTag:
            if (i >= 1) add(t, w[i].token.surface, w[i - 1].tag.str());
            break;
        }
      }
    }
  }
}

}  // namespace detail

/// Greedy error-driven rule learning: starting from the initial-state
/// annotation, repeatedly instantiate candidate rules from current errors,
/// score each by net corrections over the whole working corpus, and accept
/// the best until no candidate gains at least min_gain. Ties break on the
/// serialized rule text, so training is deterministic.
inline TrainResult train(
    const TaggedDocument& gold, const Lexicon& lex,
    const std::vector<RuleTemplate>& templates, std::uint64_t min_gain,
    const std::vector<SuffixRule>& suffix_rules = default_suffix_rules()) {
  if (gold.empty()) throw std::invalid_argument("train: empty gold corpus");
  if (min_gain == 0) throw std::invalid_argument("train: min_gain must be >= 1");

  TaggedDocument working;
  working.reserve(gold.size());
  for (const TaggedSentence& gs : gold) {
    Sentence sent;
    sent.reserve(gs.size());
    for (const TaggedToken& tt : gs) sent.push_back(tt.token);
    working.push_back(initial_annotate(sent, lex, suffix_rules));
  }

  TrainResult result;
  while (true) {
    std::map<std::string, ContextualRule> candidates;
    detail::propose_candidates(working, gold, templates, &candidates);
    if (candidates.empty()) break;

    const ContextualRule* best = nullptr;
    std::int64_t best_score = 0;
    // std::map iteration is in serialized-text order, so the first maximum
    // seen is the tie-break winner.
    for (const auto& [key, rule] : candidates) {
      std::int64_t score = detail::score_candidate(rule, working, gold);
      if (best == nullptr || score > best_score) {
        best = &rule;
        best_score = score;
      }
    }
    if (best == nullptr || best_score < static_cast<std::int64_t>(min_gain))
      break;

    std::uint64_t errors_before = detail::count_errors(working, gold);
    for (TaggedSentence& sent : working) apply_rule_in_place(*best, sent);
    std::uint64_t errors_after = detail::count_errors(working, gold);
    result.rules.push_back(*best);
    result.steps.push_back(
        TrainStep{*best, best_score, errors_before, errors_after});
  }
  return result;
}

}  // namespace rapidtag

#endif  // RAPIDTAG_TBL_HPP_
