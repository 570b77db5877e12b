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

#ifndef RAPIDTAG_TOKEN_HPP_
#define RAPIDTAG_TOKEN_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "rapidtag/pos_tag.hpp"

namespace rapidtag {

/// One surface token. `surface` is non-empty and contains no whitespace;
/// (sentence_index, position_in_sentence) orders tokens within a document.
struct Token {
  std::string surface;
  std::size_t sentence_index = 0;
  std::size_t position_in_sentence = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

using Sentence = std::vector<Token>;
using Document = std::vector<Sentence>;

struct TaggedToken {
  Token token;
  PosTag tag;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

using TaggedSentence = std::vector<TaggedToken>;
using TaggedDocument = std::vector<TaggedSentence>;

}  // namespace rapidtag

#endif  // RAPIDTAG_TOKEN_HPP_
