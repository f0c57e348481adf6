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

#include "stylolab/textproc/sentences.h"

#include "stylolab/common/io.h"
#include "stylolab/common/resources.h"
#include "stylolab/common/utf8.h"

namespace stylolab::textproc {
namespace {

bool IsTerminator(char32_t cp) {
  return cp == '.' || cp == '!' || cp == '?' || cp == 0x2026;
}

bool IsCloser(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == ')' || cp == ']' || cp == 0x201D ||
         cp == 0x2019 || cp == 0x00BB;
}

bool IsOpener(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == '(' || cp == '[' || cp == 0x201C ||
         cp == 0x2018 || cp == 0x00AB;
}

}  // namespace

AbbreviationSet::AbbreviationSet(const std::vector<std::string>& entries) {
  for (const std::string& e : entries) entries_.insert(utf8::ToLower(e));
}

const AbbreviationSet& AbbreviationSet::Default() {
  static const AbbreviationSet kDefault(
      ParseWordList(EmbeddedResource("abbreviations.txt")));
  return kDefault;
}

bool AbbreviationSet::Contains(std::string_view word_with_period) const {
  return entries_.contains(utf8::ToLower(word_with_period));
}

SentenceList SplitSentences(std::string_view text,
                            const AbbreviationSet& abbreviations) {
  SentenceList out;
  const std::size_t n = text.size();
  std::size_t pos = 0;
  std::size_t sent_begin = std::string_view::npos;  // first non-space byte
  std::size_t last_end = 0;  // end of the last non-space code point

  while (pos < n) {
    const std::size_t cp_start = pos;
    const char32_t cp = utf8::Next(text, pos);
    if (utf8::IsSpace(cp)) continue;
    if (sent_begin == std::string_view::npos) sent_begin = cp_start;
    last_end = pos;
    if (!IsTerminator(cp)) continue;

    // Consume the whole terminator run and any closers.
    bool single_period = cp == '.';
    std::size_t run_end = pos;
    while (run_end < n) {
      std::size_t p = run_end;
      char32_t c = utf8::Next(text, p);
      if (!IsTerminator(c)) break;
      single_period = false;
      run_end = p;
    }
    while (run_end < n) {
      std::size_t p = run_end;
      char32_t c = utf8::Next(text, p);
      if (!IsCloser(c)) break;
      run_end = p;
    }

    // Look at what follows: need whitespace, then a sentence opener or EOT.
    std::size_t p = run_end;
    bool saw_space = false;
    char32_t next = 0;
    std::size_t next_pos = n;
    while (p < n) {
      std::size_t q = p;
      char32_t c = utf8::Next(text, q);
      if (!utf8::IsSpace(c)) {
        next = c;
        next_pos = q;
        break;
      }
      saw_space = true;
      p = q;
    }
    bool boundary = false;
    if (p >= n) {
      boundary = true;
    } else if (saw_space) {
      if (utf8::IsUpper(next) || utf8::IsDigit(next)) {
        boundary = true;
      } else if (IsOpener(next) && next_pos < n) {
        std::size_t r = next_pos;
        char32_t after = utf8::Next(text, r);
        boundary = utf8::IsUpper(after) || utf8::IsDigit(after);
      }
    }
    if (boundary && single_period && !abbreviations.empty()) {
      // The word ending at this period, back to the previous space.
      std::size_t w = cp_start;
      while (w > sent_begin) {
        std::size_t b = w - 1;
        while (b > sent_begin &&
               (static_cast<unsigned char>(text[b]) & 0xC0) == 0x80) {
          --b;
        }
        std::size_t tmp = b;
        if (utf8::IsSpace(utf8::Next(text, tmp))) break;
        w = b;
      }
      if (abbreviations.Contains(text.substr(w, pos - w))) boundary = false;
    }
    if (!boundary) continue;

    out.push_back({sent_begin, run_end});
    sent_begin = std::string_view::npos;
    pos = run_end;
    last_end = run_end;
  }
  if (sent_begin != std::string_view::npos) {
    out.push_back({sent_begin, last_end});
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> SentenceTokenRanges(
    const TokenStream& tokens, std::span<const Sentence> sentences) {
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  ranges.reserve(sentences.size());
  std::size_t t = 0;
  const auto& toks = tokens.tokens;
  for (const Sentence& s : sentences) {
    while (t < toks.size() && toks[t].begin < s.begin) ++t;
    std::size_t first = t;
    while (t < toks.size() && toks[t].end <= s.end) ++t;
    ranges.emplace_back(first, t);
  }
  return ranges;
}

}  // namespace stylolab::textproc
