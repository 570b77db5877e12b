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

#ifndef RAPIDTAG_FREQ_TABLE_HPP_
#define RAPIDTAG_FREQ_TABLE_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rapidtag/text_util.hpp"
#include "rapidtag/token.hpp"

namespace rapidtag {

/// Exact-case word-form counts over a raw corpus. A case-folded view is
/// maintained alongside the exact counts because the -ing/-ed heuristic
/// sums occurrences over all casings. Immutable-after-build by convention;
/// merging adds counts pointwise and is commutative and associative.
class FreqTable {
 public:
  using Counts = std::map<std::string, std::uint64_t>;

  void add(std::string_view word, std::uint64_t n = 1) {
    if (n == 0) return;
    counts_[std::string(word)] += n;
    folded_[to_lower_ascii(word)] += n;
    total_ += n;
  }

  /// Exact-case count; 0 if absent.
  std::uint64_t count(std::string_view word) const {
    auto it = counts_.find(std::string(word));
    return it == counts_.end() ? 0 : it->second;
  }

  /// Case-insensitive count: sum over all stored casings of `word`.
  std::uint64_t count_folded(std::string_view word) const {
    auto it = folded_.find(to_lower_ascii(word));
    return it == folded_.end() ? 0 : it->second;
  }

  std::uint64_t total_tokens() const { return total_; }
  std::size_t distinct_words() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }

  const Counts& counts() const { return counts_; }
  const Counts& folded_counts() const { return folded_; }

  void merge(const FreqTable& other) {
    for (const auto& [w, n] : other.counts_) counts_[w] += n;
    for (const auto& [w, n] : other.folded_) folded_[w] += n;
    total_ += other.total_;
  }

  friend bool operator==(const FreqTable& a, const FreqTable& b) {
    return a.counts_ == b.counts_ && a.total_ == b.total_;
  }

 private:
  Counts counts_;
  Counts folded_;
  std::uint64_t total_ = 0;
};

inline FreqTable count_frequencies(const Document& doc) {
  FreqTable table;
  for (const Sentence& sent : doc)
    for (const Token& tok : sent) table.add(tok.surface);
  return table;
}

inline FreqTable merge_counts(const FreqTable& a, const FreqTable& b) {
  FreqTable out = a;
  out.merge(b);
  return out;
}

/// TSV dump, `word<TAB>count`, descending by count then lexicographic,
/// newline-terminated.
inline std::string freq_to_tsv(const FreqTable& table) {
  std::vector<std::pair<std::string_view, std::uint64_t>> rows;
  rows.reserve(table.distinct_words());
  for (const auto& [w, n] : table.counts()) rows.emplace_back(w, n);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::string out;
  for (const auto& [w, n] : rows) {
    out.append(w);
    out.push_back('\t');
    out.append(std::to_string(n));
    out.push_back('\n');
  }
  return out;
}

}  // namespace rapidtag

#endif  // RAPIDTAG_FREQ_TABLE_HPP_
