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

#ifndef RAPIDTAG_SUFFIX_RULE_DATA_HPP_
#define RAPIDTAG_SUFFIX_RULE_DATA_HPP_

#include <string_view>

namespace rapidtag {

// Default suffix rule table. This is data, not code: the same bytes are
// shipped as data/suffix_rules.tsv so deployments can edit or replace the
// set without rebuilding. Format per line:
//
//   suffix<TAB>tag[,tag...]<TAB>min_stem_length<TAB>confidence
//
// Line order is the tie-break order among equal-length matches. Confidence
// values for the first nine rows are measured precisions; the rest are
// editorial estimates for the derivational-suffix extension. The -ate/-ates
// rows are known to be imprecise in scientific text and are kept at their
// measured 0.557 so a confidence floor can exclude them.
inline constexpr std::string_view kDefaultSuffixRulesTsv =
    "# suffix\ttags\tmin_stem_length\tconfidence\n"
    "ize\tVB,VBP\t2\t1.000\n"
    "izes\tVBZ\t2\t1.000\n"
    "ous\tJJ\t2\t1.000\n"
    "er\tNN\t2\t0.995\n"
    "or\tNN\t2\t0.995\n"
    "ers\tNNS\t2\t0.995\n"
    "ors\tNNS\t2\t0.995\n"
    "ate\tVB,VBP\t2\t0.557\n"
    "ates\tVBZ\t2\t0.557\n"
    "ify\tVB,VBP\t2\t0.950\n"
    "ifies\tVBZ\t2\t0.950\n"
    "tion\tNN\t2\t0.990\n"
    "tions\tNNS\t2\t0.990\n"
    "sion\tNN\t2\t0.990\n"
    "sions\tNNS\t2\t0.990\n"
    "ment\tNN\t2\t0.970\n"
    "ments\tNNS\t2\t0.970\n"
    "ness\tNN\t2\t0.990\n"
    "nesses\tNNS\t2\t0.990\n"
    "ity\tNN\t2\t0.980\n"
    "ities\tNNS\t2\t0.980\n"
    "ism\tNN\t2\t0.970\n"
    "isms\tNNS\t2\t0.970\n"
    "ist\tNN\t2\t0.950\n"
    "ists\tNNS\t2\t0.950\n"
    "ance\tNN\t2\t0.950\n"
    "ances\tNNS\t2\t0.950\n"
    "ence\tNN\t2\t0.950\n"
    "ences\tNNS\t2\t0.950\n"
    "ancy\tNN\t2\t0.950\n"
    "ency\tNN\t2\t0.950\n"
    "ship\tNN\t2\t0.950\n"
    "ships\tNNS\t2\t0.950\n"
    "hood\tNN\t2\t0.950\n"
    "hoods\tNNS\t2\t0.950\n"
    "logy\tNN\t2\t0.970\n"
    "logies\tNNS\t2\t0.970\n"
    "graphy\tNN\t2\t0.970\n"
    "itis\tNN\t2\t0.980\n"
    "ful\tJJ\t2\t0.900\n"
    "less\tJJ\t2\t0.950\n"
    "able\tJJ\t2\t0.950\n"
    "ible\tJJ\t2\t0.950\n"
    "ical\tJJ\t2\t0.950\n"
    "ive\tJJ\t2\t0.900\n"
    "ish\tJJ\t2\t0.900\n"
    "ic\tJJ\t3\t0.850\n"
    "ly\tRB\t3\t0.900\n"
    "ing\tVBG\t2\t0.850\n"
    "ed\tVBN\t3\t0.800\n"
    "es\tNNS\t3\t0.750\n"
    "s\tNNS\t3\t0.650\n";

}  // namespace rapidtag

#endif  // RAPIDTAG_SUFFIX_RULE_DATA_HPP_
