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

#ifndef STYLOLAB_COMMON_UTF8_H_
#define STYLOLAB_COMMON_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace stylolab::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes the code point at s[pos] and advances pos past it. Invalid or
// truncated sequences decode to kReplacement and advance by one byte.
char32_t Next(std::string_view s, std::size_t& pos);

// Strict validation: rejects overlongs, surrogates and values > U+10FFFF.
// On failure `bad_offset` (if non-null) receives the first bad byte offset.
bool IsValid(std::string_view s, std::size_t* bad_offset = nullptr);

void Append(std::string& out, char32_t cp);

// Character classes. Letters cover ASCII, Latin, Greek, Cyrillic and any
// other code point outside the known punctuation/symbol/emoji blocks; there
// is no Unicode database behind this.
bool IsLetter(char32_t cp);
bool IsDigit(char32_t cp);
bool IsSpace(char32_t cp);
bool IsUpper(char32_t cp);
bool IsApostrophe(char32_t cp);  // ' and U+2019

// Simple case folding for ASCII, Latin-1, Latin Extended-A, Greek and
// Cyrillic capitals. Other code points are returned unchanged.
char32_t ToLower(char32_t cp);

std::string ToLower(std::string_view s);

// Number of code points (invalid bytes count as one each).
std::size_t Length(std::string_view s);

}  // namespace stylolab::utf8

#endif  // STYLOLAB_COMMON_UTF8_H_
