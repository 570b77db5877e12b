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

#ifndef RAPIDTAG_TOKENIZE_HPP_
#define RAPIDTAG_TOKENIZE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "rapidtag/errors.hpp"
#include "rapidtag/text_util.hpp"
#include "rapidtag/token.hpp"

namespace rapidtag {

namespace detail {

inline bool is_detachable_punct(char c) {
  switch (c) {
    case '.':
    case ',':
    case ';':
    case ':':
    case '!':
    case '?':
    case '(':
    case ')':
    case '[':
    case ']':
    case '{':
    case '}':
    case '"':
    case '\'':
      return true;
    default:
      return false;
  }
}

inline bool is_space_char(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Splits one whitespace-free chunk into tokens: leading and trailing
// punctuation characters come off one by one, the remaining core stays
// whole (internal hyphens, slashes, digits are kept, so IL-2 and 3.5
// survive intact).
inline std::vector<std::string> detach_punct(std::string_view chunk) {
  std::vector<std::string> out;
  std::size_t lo = 0;
  std::size_t hi = chunk.size();
  while (lo < hi && is_detachable_punct(chunk[lo])) {
    out.emplace_back(1, chunk[lo]);
    ++lo;
  }
  std::vector<char> trailing;
  while (hi > lo && is_detachable_punct(chunk[hi - 1])) {
    trailing.push_back(chunk[hi - 1]);
    --hi;
  }
  if (lo < hi) out.emplace_back(chunk.substr(lo, hi - lo));
  for (auto it = trailing.rbegin(); it != trailing.rend(); ++it)
    out.emplace_back(1, *it);
  return out;
}

inline bool is_sentence_final(std::string_view tok) {
  return tok == "." || tok == "?" || tok == "!";
}

}  // namespace detail

/// Whitespace tokenization with punctuation detachment and a simple
/// sentence splitter: a sentence ends after "." / "?" / "!" standing at the
/// end of its chunk when the next chunk starts with an ASCII uppercase
/// letter, or at end of input. Deterministic; throws EncodingError on
/// malformed UTF-8.
inline Document tokenize(std::string_view text) {
  if (auto bad = first_invalid_utf8(text)) throw EncodingError(*bad);

  // Whitespace-separated chunks.
  std::vector<std::string_view> chunks;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && detail::is_space_char(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !detail::is_space_char(text[i])) ++i;
    if (i > start) chunks.push_back(text.substr(start, i - start));
  }

  Document doc;
  Sentence current;
  const auto close_sentence = [&] {
    if (!current.empty()) {
      doc.push_back(std::move(current));
      current.clear();
    }
  };

  for (std::size_t c = 0; c < chunks.size(); ++c) {
    std::vector<std::string> toks = detail::detach_punct(chunks[c]);
    for (std::size_t t = 0; t < toks.size(); ++t) {
      bool last_in_chunk = (t + 1 == toks.size());
      bool final_punct = detail::is_sentence_final(toks[t]);
      current.push_back(Token{std::move(toks[t]), doc.size(), current.size()});
      if (final_punct && last_in_chunk) {
        bool at_end = (c + 1 == chunks.size());
        if (at_end || is_ascii_upper(chunks[c + 1].front())) close_sentence();
      }
    }
  }
  close_sentence();
  return doc;
}

}  // namespace rapidtag

#endif  // RAPIDTAG_TOKENIZE_HPP_
