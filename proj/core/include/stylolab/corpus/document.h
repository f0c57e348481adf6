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

#ifndef STYLOLAB_CORPUS_DOCUMENT_H_
#define STYLOLAB_CORPUS_DOCUMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace stylolab::corpus {

enum class DocumentKind { kArticle, kPost };
enum class GroupLabel { kFarRight, kAntivax, kNormal };
enum class StyleLabel { kCasual, kEmpowerment, kClickbait, kExpert, kIntimacy };
enum class Origin { kProduced, kShared };
enum class Lean { kLeft, kCenter, kRight };

// Raw five-point publisher rating.
enum class Rating {
  kExtremeLeft,
  kModerateLeft,
  kCenter,
  kModerateRight,
  kExtremeRight
};

// Three-class leaning that still remembers whether the publisher was rated
// extreme-right. far_right implies value == kRight.
struct Leaning3 {
  Lean value = Lean::kCenter;
  bool far_right = false;

  friend bool operator==(const Leaning3&, const Leaning3&) = default;
};

// Seconds since the Unix epoch, UTC.
using Timestamp = std::int64_t;

struct Document {
  std::string id;
  std::string text;
  std::optional<std::string> title;
  std::optional<std::string> publisher;
  std::optional<std::string> topic;
  std::optional<Timestamp> published_at;
  std::optional<GroupLabel> group_label;
  std::optional<StyleLabel> style_label;
  Origin origin = Origin::kProduced;
  std::optional<Leaning3> leaning;
  DocumentKind kind = DocumentKind::kArticle;

  friend bool operator==(const Document&, const Document&) = default;
};

// Lowercase snake_case names used in every file format.
std::string_view ToString(DocumentKind v);
std::string_view ToString(GroupLabel v);
std::string_view ToString(StyleLabel v);
std::string_view ToString(Origin v);
std::string_view ToString(Lean v);
std::string_view ToString(Rating v);

// Parsers return nullopt for unknown names.
std::optional<GroupLabel> ParseGroupLabel(std::string_view s);
std::optional<StyleLabel> ParseStyleLabel(std::string_view s);
std::optional<Origin> ParseOrigin(std::string_view s);
std::optional<Lean> ParseLean(std::string_view s);
std::optional<Rating> ParseRating(std::string_view s);

// ISO 8601 "YYYY-MM-DD", "YYYY-MM-DDTHH:MM[:SS[.fff]]" with "Z" or "+hh:mm"
// offset (no offset means UTC). Returns nullopt for malformed or impossible
// dates.
std::optional<Timestamp> ParseTimestamp(std::string_view s);

// "YYYY-MM-DDTHH:MM:SSZ".
std::string FormatTimestamp(Timestamp t);

}  // namespace stylolab::corpus

#endif  // STYLOLAB_CORPUS_DOCUMENT_H_
