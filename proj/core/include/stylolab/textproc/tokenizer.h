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

#ifndef STYLOLAB_TEXTPROC_TOKENIZER_H_
#define STYLOLAB_TEXTPROC_TOKENIZER_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stylolab::textproc {

enum class TokenKind : std::uint8_t { kWord, kNumber, kPunctuation };

// Spans are byte offsets into the tokenized text, [begin, end).
struct Token {
  TokenKind kind;
  std::uint32_t begin;
  std::uint32_t end;
  std::string norm;  // lowercased surface

  std::string_view Surface(std::string_view text) const {
    return text.substr(begin, end - begin);
  }
};

struct TokenStream {
  std::vector<Token> tokens;
  std::size_t word_count = 0;    // kWord tokens
  std::size_t number_count = 0;  // kNumber tokens

  // WC: word plus number tokens.
  std::size_t wc() const { return word_count + number_count; }
  std::size_t punctuation_count() const {
    return tokens.size() - word_count - number_count;
  }
};

// Rules:
//  - word: maximal run of letters; an apostrophe (' or U+2019) is kept when
//    a letter follows it and the run has already started ("don't").
//  - number: maximal digit run; '.' or ',' between two digits continues it.
//  - punctuation: every other non-space code point, one token each.
// Invalid UTF-8 bytes become single punctuation tokens.
TokenStream Tokenize(std::string_view text);

}  // namespace stylolab::textproc

#endif  // STYLOLAB_TEXTPROC_TOKENIZER_H_
