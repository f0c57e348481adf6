// Copyright 2026 The Stylolab Authors.
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

#ifndef STYLOLAB_TEXTPROC_SENTENCES_H_
#define STYLOLAB_TEXTPROC_SENTENCES_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "stylolab/textproc/tokenizer.h"

namespace stylolab::textproc {

struct Sentence {
  std::size_t begin = 0;  // byte offsets, [begin, end)
  std::size_t end = 0;

  std::string_view Text(std::string_view text) const {
    return text.substr(begin, end - begin);
  }
};

using SentenceList = std::vector<Sentence>;

// Case-insensitive set of abbreviations such as "Dr." that never end a
// sentence. Entries include their trailing period.
class AbbreviationSet {
 public:
  AbbreviationSet() = default;
  explicit AbbreviationSet(const std::vector<std::string>& entries);

  // The shipped English list (data/abbreviations.txt).
  static const AbbreviationSet& Default();

  bool Contains(std::string_view word_with_period) const;
  bool empty() const { return entries_.empty(); }

 private:
  std::unordered_set<std::string> entries_;
};

// A sentence ends after a run of '.', '!', '?' or U+2026 (plus any closing
// quotes or brackets) when the run is followed by whitespace and then an
// uppercase letter, a digit, or an opening quote/bracket, or by nothing but
// whitespace. A lone '.' ending a listed abbreviation does not end a
// sentence. Text with no boundary is one sentence. Sentences are trimmed of
// surrounding whitespace and together cover every non-space character.
SentenceList SplitSentences(std::string_view text,
                            const AbbreviationSet& abbreviations =
                                AbbreviationSet::Default());

// For each sentence, the half-open token index range [first, last) of the
// tokens that fall inside it.
std::vector<std::pair<std::size_t, std::size_t>> SentenceTokenRanges(
    const TokenStream& tokens, std::span<const Sentence> sentences);

}  // namespace stylolab::textproc

#endif  // STYLOLAB_TEXTPROC_SENTENCES_H_
