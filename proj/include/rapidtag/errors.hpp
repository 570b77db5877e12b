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

#ifndef RAPIDTAG_ERRORS_HPP_
#define RAPIDTAG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rapidtag {

/// Base class for all rapidtag errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File-system failure: missing path, unreadable file, failed write.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. `line()` is 1-based; 0 means "no line context".
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, std::size_t line = 0)
      : Error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Input bytes are not valid UTF-8.
class EncodingError : public Error {
 public:
  explicit EncodingError(std::size_t byte_offset)
      : Error("invalid UTF-8 byte sequence at offset " +
              std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Gold and predicted token streams do not line up. Indices are 0-based
/// and identify the first divergent position.
class AlignmentError : public Error {
 public:
  AlignmentError(const std::string& msg, std::size_t sentence,
                 std::size_t token)
      : Error("alignment mismatch at sentence " + std::to_string(sentence) +
              ", token " + std::to_string(token) + ": " + msg),
        sentence_(sentence),
        token_(token) {}

  std::size_t sentence() const { return sentence_; }
  std::size_t token() const { return token_; }

 private:
  std::size_t sentence_;
  std::size_t token_;
};

}  // namespace rapidtag

#endif  // RAPIDTAG_ERRORS_HPP_
