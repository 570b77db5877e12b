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

#ifndef RAPIDTAG_LEXICON_HPP_
#define RAPIDTAG_LEXICON_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rapidtag/errors.hpp"
#include "rapidtag/pos_tag.hpp"
#include "rapidtag/text_util.hpp"
#include "rapidtag/token.hpp"

namespace rapidtag {

/// How an entry got into the lexicon. Seed entries come from the lexicon
/// file; adaptation adds suffix-rule and ortho entries and re-marks entries
/// whose first tag was promoted by the -ing/-ed heuristic.
enum class Provenance {
  kSeedFile,
  kSuffixRule,
  kOrtho,
  kIngReorder,
};

inline std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kSeedFile:
      return "seed-file";
    case Provenance::kSuffixRule:
      return "suffix-rule";
    case Provenance::kOrtho:
      return "ortho";
    case Provenance::kIngReorder:
      return "ing-heuristic-reorder";
  }
  return "unknown";
}

struct LexiconEntry {
  std::vector<PosTag> tags;  // non-empty, duplicate-free; tags[0] is the
                             // initial-state annotator's choice
  Provenance origin = Provenance::kSeedFile;
};

/// Word form -> ordered tag list. Mutable only during build/adaptation;
/// frozen before tagging, after which concurrent readers are safe.
class Lexicon {
 public:
  enum class AddResult { kAdded, kSkipped };

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Exact-case entry, or nullptr.
  const LexiconEntry* find(std::string_view word) const {
    auto it = entries_.find(std::string(word));
    return it == entries_.end() ? nullptr : &it->second;
  }

  /// Tag list for a surface form: exact-case match wins; if absent and the
  /// surface has any uppercase, the lowercased form is tried. nullptr when
  /// both miss.
  const std::vector<PosTag>* lookup(std::string_view surface) const {
    if (const LexiconEntry* e = find(surface)) return &e->tags;
    if (has_ascii_upper(surface)) {
      if (const LexiconEntry* e = find(to_lower_ascii(surface)))
        return &e->tags;
    }
    return nullptr;
  }

  /// Inserts a new entry; an existing word is never overwritten (the call
  /// reports kSkipped instead). Throws std::invalid_argument on an empty or
  /// duplicate-carrying tag list.
  AddResult add_entry(std::string word, std::vector<PosTag> tags,
                      Provenance origin) {
    if (tags.empty())
      throw std::invalid_argument("add_entry: empty tag list for '" + word +
                                  "'");
    for (std::size_t i = 0; i < tags.size(); ++i)
      for (std::size_t j = i + 1; j < tags.size(); ++j)
        if (tags[i] == tags[j])
          throw std::invalid_argument("add_entry: duplicate tag " +
                                      tags[i].str() + " for '" + word + "'");
    auto [it, inserted] =
        entries_.try_emplace(std::move(word), LexiconEntry{std::move(tags), origin});
    (void)it;
    return inserted ? AddResult::kAdded : AddResult::kSkipped;
  }

  /// Moves `tag` to the front of the entry's tag list (inserting it if
  /// absent); the rest of the order is preserved. Idempotent. Returns true
  /// when the list actually changed. Throws std::out_of_range if the word
  /// has no entry.
  bool promote_first_tag(std::string_view word, const PosTag& tag) {
    auto it = entries_.find(std::string(word));
    if (it == entries_.end())
      throw std::out_of_range("promote_first_tag: no entry for '" +
                              std::string(word) + "'");
    std::vector<PosTag>& tags = it->second.tags;
    if (tags.front() == tag) return false;
    for (std::size_t i = 1; i < tags.size(); ++i) {
      if (tags[i] == tag) {
        tags.erase(tags.begin() + static_cast<std::ptrdiff_t>(i));
        break;
      }
    }
    tags.insert(tags.begin(), tag);
    return true;
  }

  /// Re-marks an existing entry's provenance (used when the -ing heuristic
  /// reorders an entry). Throws std::out_of_range if absent.
  void set_provenance(std::string_view word, Provenance p) {
    auto it = entries_.find(std::string(word));
    if (it == entries_.end())
      throw std::out_of_range("set_provenance: no entry for '" +
                              std::string(word) + "'");
    it->second.origin = p;
  }

  const std::map<std::string, LexiconEntry>& entries() const {
    return entries_;
  }

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    for (; ia != a.entries_.end(); ++ia, ++ib)
      if (ia->first != ib->first || ia->second.tags != ib->second.tags)
        return false;
    return true;
  }

 private:
  std::map<std::string, LexiconEntry> entries_;
};

/// Parses `word TAG1 [TAG2 ...]` lines, single-space separated. Blank lines
/// are skipped. Duplicate words, malformed lines, and invalid tag symbols
/// raise ParseError with the 1-based line number.
inline Lexicon parse_lexicon(std::string_view text) {
  Lexicon lex;
  std::size_t lineno = 0;
  for (std::string_view line : split_lines(text)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string_view> fields = split(line, ' ');
    if (fields.size() < 2)
      throw ParseError("expected 'word TAG1 [TAG2 ...]'", lineno);
    for (std::string_view f : fields)
      if (f.empty())
        throw ParseError("empty field (double space?)", lineno);
    std::string_view word = fields[0];
    if (contains_whitespace(word))
      throw ParseError("word contains whitespace", lineno);
    std::vector<PosTag> tags;
    tags.reserve(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (!PosTag::valid_symbol(fields[i]))
        throw ParseError(
            "invalid tag symbol '" + std::string(fields[i]) + "'", lineno);
      tags.emplace_back(std::string(fields[i]));
    }
    for (std::size_t i = 0; i < tags.size(); ++i)
      for (std::size_t j = i + 1; j < tags.size(); ++j)
        if (tags[i] == tags[j])
          throw ParseError("duplicate tag " + tags[i].str(), lineno);
    if (lex.find(word) != nullptr)
      throw ParseError("duplicate entry for '" + std::string(word) + "'",
                       lineno);
    lex.add_entry(std::string(word), std::move(tags), Provenance::kSeedFile);
  }
  return lex;
}

/// Canonical byte-deterministic form: one line per word, sorted
/// lexicographically, single spaces, trailing newline.
inline std::string serialize_lexicon(const Lexicon& lex) {
  std::string out;
  for (const auto& [word, entry] : lex.entries()) {
    out.append(word);
    for (const PosTag& t : entry.tags) {
      out.push_back(' ');
      out.append(t.str());
    }
    out.push_back('\n');
  }
  return out;
}

/// Token-level lexicon coverage of a token stream.
struct Coverage {
  std::uint64_t tokens = 0;
  std::uint64_t hits = 0;

  bool empty_stream() const { return tokens == 0; }
  double fraction() const {
    return tokens == 0 ? 0.0
                       : static_cast<double>(hits) / static_cast<double>(tokens);
  }
};

inline Coverage coverage(const Lexicon& lex, const Document& doc) {
  Coverage cov;
  for (const Sentence& sent : doc) {
    for (const Token& tok : sent) {
      ++cov.tokens;
      if (lex.lookup(tok.surface) != nullptr) ++cov.hits;
    }
  }
  return cov;
}

/// Auxiliary by-type coverage: fraction of distinct surface forms covered.
inline Coverage coverage_by_type(const Lexicon& lex, const Document& doc) {
  std::map<std::string_view, bool> seen;
  for (const Sentence& sent : doc)
    for (const Token& tok : sent) seen.emplace(tok.surface, false);
  Coverage cov;
  for (auto& [surface, _] : seen) {
    ++cov.tokens;
    if (lex.lookup(surface) != nullptr) ++cov.hits;
  }
  return cov;
}

}  // namespace rapidtag

#endif  // RAPIDTAG_LEXICON_HPP_
