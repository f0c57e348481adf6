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

#include "stylolab/textproc/tokenizer.h"

#include "stylolab/common/utf8.h"

namespace stylolab::textproc {
namespace {

// Peeks the code point at pos without consuming it.
char32_t Peek(std::string_view s, std::size_t pos, std::size_t* next) {
  std::size_t p = pos;
  char32_t cp = utf8::Next(s, p);
  if (next) *next = p;
  return cp;
}

}  // namespace

TokenStream Tokenize(std::string_view text) {
  TokenStream out;
  out.tokens.reserve(text.size() / 5 + 1);
  std::size_t pos = 0;
  const std::size_t n = text.size();
  while (pos < n) {
    const std::size_t start = pos;
    const char32_t cp = utf8::Next(text, pos);
    if (utf8::IsSpace(cp)) continue;

    if (utf8::IsLetter(cp)) {
      std::string norm;
      utf8::Append(norm, utf8::ToLower(cp));
      while (pos < n) {
        std::size_t after;
        char32_t c = Peek(text, pos, &after);
        if (utf8::IsLetter(c)) {
          utf8::Append(norm, utf8::ToLower(c));
          pos = after;
        } else if (utf8::IsApostrophe(c) && after < n) {
          std::size_t after2;
          char32_t c2 = Peek(text, after, &after2);
          if (!utf8::IsLetter(c2)) break;
          norm.push_back('\'');  // U+2019 folds to ASCII
          utf8::Append(norm, utf8::ToLower(c2));
          pos = after2;
        } else {
          break;
        }
      }
      out.tokens.push_back({TokenKind::kWord, static_cast<std::uint32_t>(start),
                            static_cast<std::uint32_t>(pos), std::move(norm)});
      ++out.word_count;
      continue;
    }

    if (utf8::IsDigit(cp)) {
      while (pos < n) {
        char c = text[pos];
        if (c >= '0' && c <= '9') {
          ++pos;
        } else if ((c == '.' || c == ',') && pos + 1 < n &&
                   text[pos + 1] >= '0' && text[pos + 1] <= '9') {
          pos += 2;
        } else {
          break;
        }
      }
      out.tokens.push_back({TokenKind::kNumber,
                            static_cast<std::uint32_t>(start),
                            static_cast<std::uint32_t>(pos),
                            std::string(text.substr(start, pos - start))});
      ++out.number_count;
      continue;
    }

    std::string norm;
    if (cp == utf8::kReplacement && pos == start + 1) {
      norm.assign(text.substr(start, 1));
    } else if (cp == 0x2019) {
      norm = "'";
    } else {
      norm.assign(text.substr(start, pos - start));
    }
    out.tokens.push_back({TokenKind::kPunctuation,
                          static_cast<std::uint32_t>(start),
                          static_cast<std::uint32_t>(pos), std::move(norm)});
  }
  return out;
}

}  // namespace stylolab::textproc
