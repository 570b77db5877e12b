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

#ifndef RAPIDTAG_GENIA_HPP_
#define RAPIDTAG_GENIA_HPP_

#include <string>
#include <string_view>

#include "rapidtag/errors.hpp"
#include "rapidtag/pos_tag.hpp"
#include "rapidtag/text_util.hpp"
#include "rapidtag/token.hpp"

namespace rapidtag {

// Importer for GENIA-style part-of-speech markup:
//
//   <sentence><w c="DT">The</w> <w c="NN">study</w> ...</sentence>
//
// Everything about that markup is quarantined here; the rest of the
// toolkit only ever sees the token<TAB>tag TSV this produces. Handling is
// deliberately narrow: <sentence> elements delimit sentences, <w> elements
// carry tokens, the c attribute carries the tag (when it lists several
// alternatives separated by '|' the first one is taken), standard XML
// character entities are decoded, all other markup is ignored.

namespace genia_detail {

inline std::size_t line_of(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

inline std::string decode_entities(std::string_view s, std::size_t lineno) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out.push_back(s[i]);
      ++i;
      continue;
    }
    std::size_t end = s.find(';', i);
    if (end == std::string_view::npos)
      throw ParseError("unterminated character entity", lineno);
    std::string_view name = s.substr(i + 1, end - i - 1);
    if (name == "amp")
      out.push_back('&');
    else if (name == "lt")
      out.push_back('<');
    else if (name == "gt")
      out.push_back('>');
    else if (name == "quot")
      out.push_back('"');
    else if (name == "apos")
      out.push_back('\'');
    else
      throw ParseError("unknown character entity '&" + std::string(name) +
                           ";'",
                       lineno);
    i = end + 1;
  }
  return out;
}

}  // namespace genia_detail

/// Parses GENIA POS markup into tagged sentences. Throws ParseError on
/// w elements without a usable c attribute, empty tokens, or tag symbols
/// outside the tagset shape.
inline TaggedDocument parse_genia(std::string_view text) {
  using genia_detail::decode_entities;
  using genia_detail::line_of;

  TaggedDocument doc;
  std::size_t pos = 0;
  while (true) {
    std::size_t s_open = text.find("<sentence", pos);
    if (s_open == std::string_view::npos) break;
    std::size_t s_open_end = text.find('>', s_open);
    if (s_open_end == std::string_view::npos)
      throw ParseError("unterminated <sentence> tag", line_of(text, s_open));
    std::size_t s_close = text.find("</sentence>", s_open_end);
    if (s_close == std::string_view::npos)
      throw ParseError("missing </sentence>", line_of(text, s_open));
    std::string_view body = text.substr(s_open_end + 1,
                                        s_close - s_open_end - 1);
    const std::size_t body_offset = s_open_end + 1;

    TaggedSentence sent;
    std::size_t b = 0;
    while (true) {
      std::size_t w_open = body.find("<w ", b);
      if (w_open == std::string_view::npos) break;
      std::size_t lineno = line_of(text, body_offset + w_open);
      std::size_t w_open_end = body.find('>', w_open);
      if (w_open_end == std::string_view::npos)
        throw ParseError("unterminated <w> tag", lineno);
      std::string_view attrs = body.substr(w_open + 3,
                                           w_open_end - w_open - 3);
      std::size_t c_pos = attrs.find("c=");
      if (c_pos == std::string_view::npos)
        throw ParseError("<w> element without c attribute", lineno);
      if (c_pos + 2 >= attrs.size())
        throw ParseError("malformed c attribute", lineno);
      char quote = attrs[c_pos + 2];
      if (quote != '"' && quote != '\'')
        throw ParseError("malformed c attribute", lineno);
      std::size_t c_end = attrs.find(quote, c_pos + 3);
      if (c_end == std::string_view::npos)
        throw ParseError("unterminated c attribute", lineno);
      std::string tag_value(attrs.substr(c_pos + 3, c_end - c_pos - 3));
      if (std::size_t bar = tag_value.find('|'); bar != std::string::npos)
        tag_value.resize(bar);  // ambiguous annotation: take the first tag
      std::size_t w_close = body.find("</w>", w_open_end);
      if (w_close == std::string_view::npos)
        throw ParseError("missing </w>", lineno);
      std::string surface = decode_entities(
          body.substr(w_open_end + 1, w_close - w_open_end - 1), lineno);
      if (surface.empty())
        throw ParseError("empty token in <w> element", lineno);
      if (contains_whitespace(surface))
        throw ParseError("token contains whitespace", lineno);
      if (!PosTag::valid_symbol(tag_value))
        throw ParseError("invalid tag symbol '" + tag_value + "'", lineno);
      sent.push_back(TaggedToken{Token{std::move(surface), doc.size(),
                                       sent.size()},
                                 PosTag(std::move(tag_value))});
      b = w_close + 4;
    }
    if (!sent.empty()) doc.push_back(std::move(sent));
    pos = s_close + 11;
  }
  return doc;
}

}  // namespace rapidtag

#endif  // RAPIDTAG_GENIA_HPP_
