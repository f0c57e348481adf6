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

#ifndef STYLOLAB_TEXTPROC_ANALYZED_TEXT_H_
#define STYLOLAB_TEXTPROC_ANALYZED_TEXT_H_

#include <string>
#include <string_view>

#include "stylolab/textproc/sentences.h"
#include "stylolab/textproc/tokenizer.h"

namespace stylolab::textproc {

// A text with its tokens and sentences, computed once and shared by every
// feature extractor.
struct AnalyzedText {
  std::string text;
  TokenStream tokens;
  SentenceList sentences;
};

inline AnalyzedText Analyze(std::string_view text,
                            const AbbreviationSet& abbreviations =
                                AbbreviationSet::Default()) {
  AnalyzedText out;
  out.text.assign(text);
  out.tokens = Tokenize(out.text);
  out.sentences = SplitSentences(out.text, abbreviations);
  return out;
}

}  // namespace stylolab::textproc

#endif  // STYLOLAB_TEXTPROC_ANALYZED_TEXT_H_
