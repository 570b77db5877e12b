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

#ifndef RAPIDTAG_POS_TAG_HPP_
#define RAPIDTAG_POS_TAG_HPP_

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rapidtag/text_util.hpp"

namespace rapidtag {

/// A Penn-Treebank-style part-of-speech symbol (NN, VBZ, PRP$, -LRB-,
/// punctuation tags like "." and ","). Validated on construction: symbols
/// are non-empty and limited to uppercase letters, digits, and the
/// characters $ # . , : ( ) ` ' - used by the punctuation/bracket tags.
class PosTag {
 public:
  static bool valid_symbol(std::string_view sym) {
    if (sym.empty()) return false;
    for (char c : sym) {
      if (is_ascii_upper(c) || is_ascii_digit(c)) continue;
      switch (c) {
        case '$':
        case '#':
        case '.':
        case ',':
        case ':':
        case '(':
        case ')':
        case '`':
        case '\'':
        case '-':
          continue;
        default:
          return false;
      }
    }
    return true;
  }

  explicit PosTag(std::string sym) : sym_(std::move(sym)) {
    if (!valid_symbol(sym_))
      throw std::invalid_argument("invalid POS tag symbol: '" + sym_ + "'");
  }

  const std::string& str() const { return sym_; }

  friend bool operator==(const PosTag&, const PosTag&) = default;
  friend auto operator<=>(const PosTag&, const PosTag&) = default;

 private:
  std::string sym_;
};

}  // namespace rapidtag

#endif  // RAPIDTAG_POS_TAG_HPP_
