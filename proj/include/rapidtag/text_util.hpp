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

#ifndef RAPIDTAG_TEXT_UTIL_HPP_
#define RAPIDTAG_TEXT_UTIL_HPP_

#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rapidtag {

// ASCII-only case handling. Multi-byte UTF-8 passes through untouched;
// biomedical English is the target and case folding beyond ASCII is a
// non-goal.

inline bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_ascii_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_ascii_letter(char c) {
  return is_ascii_upper(c) || is_ascii_lower(c);
}
inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

inline char to_lower_ascii(char c) {
  return is_ascii_upper(c) ? static_cast<char>(c - 'A' + 'a') : c;
}

inline std::string to_lower_ascii(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(to_lower_ascii(c));
  return out;
}

inline bool has_ascii_upper(std::string_view s) {
  for (char c : s)
    if (is_ascii_upper(c)) return true;
  return false;
}

inline bool contains_whitespace(std::string_view s) {
  for (char c : s)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
        c == '\f')
      return true;
  return false;
}

/// Splits on a single separator character; empty fields are preserved.
inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(s.substr(start));
      return fields;
    }
    fields.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

/// Splits text into lines on '\n'; a trailing newline does not produce a
/// final empty line. Lone '\r' at end of line is stripped.
inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find('\n', start);
    if (pos == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, pos - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = pos + 1;
  }
  return lines;
}

/// Offset of the first invalid UTF-8 byte, or nullopt if well-formed.
inline std::optional<std::size_t> first_invalid_utf8(std::string_view s) {
  std::size_t i = 0;
  const auto cont = [&](std::size_t k) {
    return i + k < s.size() &&
           (static_cast<unsigned char>(s[i + k]) & 0xC0u) == 0x80u;
  };
  while (i < s.size()) {
    unsigned char b = static_cast<unsigned char>(s[i]);
    if (b < 0x80u) {
      ++i;
    } else if ((b & 0xE0u) == 0xC0u) {
      if (b < 0xC2u || !cont(1)) return i;  // C0/C1 are overlong
      i += 2;
    } else if ((b & 0xF0u) == 0xE0u) {
      if (!cont(1) || !cont(2)) return i;
      unsigned char b1 = static_cast<unsigned char>(s[i + 1]);
      if (b == 0xE0u && b1 < 0xA0u) return i;  // overlong
      if (b == 0xEDu && b1 > 0x9Fu) return i;  // surrogate range
      i += 3;
    } else if ((b & 0xF8u) == 0xF0u) {
      if (b > 0xF4u || !cont(1) || !cont(2) || !cont(3)) return i;
      unsigned char b1 = static_cast<unsigned char>(s[i + 1]);
      if (b == 0xF0u && b1 < 0x90u) return i;  // overlong
      if (b == 0xF4u && b1 > 0x8Fu) return i;  // > U+10FFFF
      i += 4;
    } else {
      return i;
    }
  }
  return std::nullopt;
}

/// Fixed-point decimal formatting ("%.*f"); all user-visible numbers go
/// through here so output stays byte-deterministic.
inline std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

}  // namespace rapidtag

#endif  // RAPIDTAG_TEXT_UTIL_HPP_
