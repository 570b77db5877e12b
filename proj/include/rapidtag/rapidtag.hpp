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

#ifndef RAPIDTAG_RAPIDTAG_HPP_
#define RAPIDTAG_RAPIDTAG_HPP_

#include "rapidtag/adapter.hpp"
#include "rapidtag/errors.hpp"
#include "rapidtag/eval.hpp"
#include "rapidtag/freq_table.hpp"
#include "rapidtag/genia.hpp"
#include "rapidtag/lexicon.hpp"
#include "rapidtag/morphology.hpp"
#include "rapidtag/pos_tag.hpp"
#include "rapidtag/tbl.hpp"
#include "rapidtag/text_io.hpp"
#include "rapidtag/token.hpp"
#include "rapidtag/tokenize.hpp"

#endif  // RAPIDTAG_RAPIDTAG_HPP_
