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

#ifndef RAPIDTAG_TEXT_IO_HPP_
#define RAPIDTAG_TEXT_IO_HPP_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rapidtag/errors.hpp"
#include "rapidtag/pos_tag.hpp"
#include "rapidtag/text_util.hpp"
#include "rapidtag/token.hpp"

namespace rapidtag {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed on '" + path.string() + "'");
  return std::move(buf).str();
}

inline void write_file(const std::filesystem::path& path,
                       std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(content.data(),
            static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("write failed on '" + path.string() + "'");
}

/// Regular files directly inside `dir`, sorted by filename so corpus
/// processing order is deterministic.
inline std::vector<std::filesystem::path> list_corpus_files(
    const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec))
    throw IoError("'" + dir.string() + "' is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  if (ec) throw IoError("cannot list '" + dir.string() + "': " + ec.message());
  std::sort(files.begin(), files.end());
  return files;
}

/// One token per line, blank line = sentence break. Consecutive blank
/// lines collapse; a token line containing whitespace is malformed.
inline Document parse_pretokenized(std::string_view text) {
  Document doc;
  Sentence current;
  std::size_t lineno = 0;
  const auto close_sentence = [&] {
    if (!current.empty()) {
      doc.push_back(std::move(current));
      current.clear();
    }
  };
  for (std::string_view line : split_lines(text)) {
    ++lineno;
    if (line.empty()) {
      close_sentence();
      continue;
    }
    if (contains_whitespace(line))
      throw ParseError("token contains whitespace", lineno);
    current.push_back(
        Token{std::string(line), doc.size(), current.size()});
  }
  close_sentence();
  return doc;
}

/// Tagged text TSV: `token<TAB>tag` lines with blank-line sentence breaks.
/// This is both the gold-annotation input format and one of the tagger
/// output formats, so tag -> eval round-trips without conversion.
inline TaggedDocument parse_tagged_tsv(std::string_view text) {
  TaggedDocument doc;
  TaggedSentence current;
  std::size_t lineno = 0;
  const auto close_sentence = [&] {
    if (!current.empty()) {
      doc.push_back(std::move(current));
      current.clear();
    }
  };
  for (std::string_view line : split_lines(text)) {
    ++lineno;
    if (line.empty()) {
      close_sentence();
      continue;
    }
    std::vector<std::string_view> fields = split(line, '\t');
    if (fields.size() != 2)
      throw ParseError("expected 'token<TAB>tag'", lineno);
    if (fields[0].empty() || contains_whitespace(fields[0]))
      throw ParseError("malformed token field", lineno);
    if (!PosTag::valid_symbol(fields[1]))
      throw ParseError("invalid tag symbol '" + std::string(fields[1]) + "'",
                       lineno);
    current.push_back(
        TaggedToken{Token{std::string(fields[0]), doc.size(), current.size()},
                    PosTag(std::string(fields[1]))});
  }
  close_sentence();
  return doc;
}

inline std::string serialize_tagged_tsv(const TaggedDocument& doc) {
  std::string out;
  for (std::size_t s = 0; s < doc.size(); ++s) {
    if (s > 0) out.push_back('\n');
    for (const TaggedToken& tt : doc[s]) {
      out.append(tt.token.surface);
      out.push_back('\t');
      out.append(tt.tag.str());
      out.push_back('\n');
    }
  }
  return out;
}

/// `token/TAG` space-joined, one sentence per line. Output-only: a token
/// may itself contain '/', so this form is not parsed back.
inline std::string serialize_tagged_slash(const TaggedDocument& doc) {
  std::string out;
  for (const TaggedSentence& sent : doc) {
    for (std::size_t i = 0; i < sent.size(); ++i) {
      if (i > 0) out.push_back(' ');
      out.append(sent[i].token.surface);
      out.push_back('/');
      out.append(sent[i].tag.str());
    }
    out.push_back('\n');
  }
  return out;
}

inline Document strip_tags(const TaggedDocument& doc) {
  Document out;
  out.reserve(doc.size());
  for (const TaggedSentence& sent : doc) {
    Sentence s;
    s.reserve(sent.size());
    for (const TaggedToken& tt : sent) s.push_back(tt.token);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace rapidtag

#endif  // RAPIDTAG_TEXT_IO_HPP_
