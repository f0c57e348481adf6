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

#include "stylolab/lexicon/lexicon.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "stylolab/common/error.h"
#include "stylolab/common/io.h"
#include "stylolab/common/utf8.h"

namespace stylolab::lexicon {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    std::string_view field = TrimAscii(line.substr(
        start, tab == std::string_view::npos ? std::string_view::npos
                                             : tab - start));
    if (!field.empty()) out.push_back(field);
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

std::optional<int> ParseId(std::string_view s) {
  int v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return v;
}

// Splits "stem*" into its parts; returns an error message on bad wildcards.
std::string ParsePatternText(std::string_view text, Pattern& out) {
  std::string lower = utf8::ToLower(text);
  out.wildcard = !lower.empty() && lower.back() == '*';
  if (out.wildcard) lower.pop_back();
  if (lower.find('*') != std::string::npos) {
    return "wildcard '*' is only allowed at the end of a pattern";
  }
  if (lower.empty()) return "empty pattern";
  out.stem = std::move(lower);
  return {};
}

}  // namespace

Lexicon::Lexicon(std::vector<Category> categories,
                 std::vector<Pattern> patterns)
    : categories_(std::move(categories)) {
  std::set<int> ids;
  std::set<std::string> names;
  for (const Category& c : categories_) {
    if (!ids.insert(c.id).second) {
      throw InputError("duplicate category id " + std::to_string(c.id));
    }
    if (c.name.empty()) throw InputError("empty category name");
    if (!names.insert(c.name).second) {
      throw InputError("duplicate category name '" + c.name + "'");
    }
  }
  std::map<std::string, Pattern> merged;
  for (Pattern& p : patterns) {
    Pattern norm;
    std::string err = ParsePatternText(p.Text(), norm);
    if (!err.empty()) throw InputError(err + ": '" + p.Text() + "'");
    for (int id : p.category_ids) {
      if (!ids.contains(id)) {
        throw InputError("pattern '" + p.Text() +
                         "' references undeclared category " +
                         std::to_string(id));
      }
    }
    Pattern& slot = merged[norm.Text()];
    if (slot.stem.empty()) slot = std::move(norm);
    slot.category_ids.insert(slot.category_ids.end(), p.category_ids.begin(),
                             p.category_ids.end());
  }
  patterns_.reserve(merged.size());
  for (auto& [text, p] : merged) {
    std::sort(p.category_ids.begin(), p.category_ids.end());
    p.category_ids.erase(
        std::unique(p.category_ids.begin(), p.category_ids.end()),
        p.category_ids.end());
    if (p.category_ids.empty()) {
      throw InputError("pattern '" + text + "' has no categories");
    }
    patterns_.push_back(std::move(p));
  }
}

std::optional<std::size_t> Lexicon::IndexOfId(int id) const {
  for (std::size_t i = 0; i < categories_.size(); ++i) {
    if (categories_[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Lexicon::IndexOfName(std::string_view name) const {
  for (std::size_t i = 0; i < categories_.size(); ++i) {
    if (categories_[i].name == name) return i;
  }
  return std::nullopt;
}

Lexicon ParseDic(std::string_view content) {
  enum class State { kBeforeHeader, kHeader, kBody } state = State::kBeforeHeader;
  std::vector<Category> categories;
  std::map<int, std::size_t> declared;
  std::set<std::string> names;
  std::vector<Pattern> patterns;
  std::size_t line_no = 0;

  std::vector<std::string_view> lines = SplitLines(content);
  // Tolerate a UTF-8 byte order mark.
  if (!lines.empty() && lines[0].starts_with("\xEF\xBB\xBF")) {
    lines[0].remove_prefix(3);
  }
  for (std::string_view raw : lines) {
    ++line_no;
    std::string_view line = TrimAscii(raw);
    if (line.empty()) continue;
    switch (state) {
      case State::kBeforeHeader:
        if (line != "%") {
          throw ParseError("expected '%' to open the category header", line_no);
        }
        state = State::kHeader;
        break;
      case State::kHeader: {
        if (line == "%") {
          state = State::kBody;
          break;
        }
        auto fields = SplitTabs(line);
        if (fields.size() != 2) {
          throw ParseError("header line must be 'id<TAB>name'", line_no);
        }
        auto id = ParseId(fields[0]);
        if (!id) {
          throw ParseError("non-integer category id '" +
                               std::string(fields[0]) + "'",
                           line_no);
        }
        if (declared.contains(*id)) {
          throw ParseError("duplicate category id " + std::to_string(*id),
                           line_no);
        }
        if (!names.insert(std::string(fields[1])).second) {
          throw ParseError("duplicate category name '" +
                               std::string(fields[1]) + "'",
                           line_no);
        }
        declared[*id] = categories.size();
        categories.push_back({*id, std::string(fields[1])});
        break;
      }
      case State::kBody: {
        if (line == "%") {
          throw ParseError("unexpected '%' after the header was closed",
                           line_no);
        }
        auto fields = SplitTabs(line);
        if (fields.size() < 2) {
          throw ParseError("body line must be 'word<TAB>id[<TAB>id...]'",
                           line_no);
        }
        Pattern p;
        std::string err = ParsePatternText(fields[0], p);
        if (!err.empty()) throw ParseError(err, line_no);
        for (std::size_t i = 1; i < fields.size(); ++i) {
          auto id = ParseId(fields[i]);
          if (!id) {
            throw ParseError("non-integer category id '" +
                                 std::string(fields[i]) + "'",
                             line_no);
          }
          if (!declared.contains(*id)) {
            throw ParseError("undeclared category id " + std::to_string(*id),
                             line_no);
          }
          p.category_ids.push_back(*id);
        }
        patterns.push_back(std::move(p));
        break;
      }
    }
  }
  if (state == State::kBeforeHeader) {
    throw ParseError("missing '%' header delimiters", 0);
  }
  if (state == State::kHeader) {
    throw ParseError("category header is never closed with '%'", line_no);
  }
  return Lexicon(std::move(categories), std::move(patterns));
}

std::string SerializeDic(const Lexicon& lexicon) {
  std::string out = "%\n";
  for (const Category& c : lexicon.categories()) {
    out += std::to_string(c.id) + "\t" + c.name + "\n";
  }
  out += "%\n";
  for (const Pattern& p : lexicon.patterns()) {
    out += p.Text();
    for (int id : p.category_ids) out += "\t" + std::to_string(id);
    out += "\n";
  }
  return out;
}

bool CategoryMask::Any() const {
  for (std::uint64_t w : bits_) {
    if (w) return true;
  }
  return false;
}

Matcher::Matcher(const Lexicon& lexicon)
    : category_count_(lexicon.categories().size()),
      mask_words_((lexicon.categories().size() + 63) / 64) {
  nodes_.emplace_back();
  for (const Pattern& p : lexicon.patterns()) {
    std::uint32_t node = 0;
    for (unsigned char c : p.stem) {
      std::uint32_t next = Child(node, c);
      if (next == 0) {
        next = static_cast<std::uint32_t>(nodes_.size());
        nodes_.emplace_back();
        auto& kids = nodes_[node].children;
        kids.insert(std::lower_bound(kids.begin(), kids.end(),
                                     std::pair<unsigned char, std::uint32_t>(c, 0)),
                    {c, next});
      }
      node = next;
    }
    std::int32_t& slot = p.wildcard ? nodes_[node].wildcard : nodes_[node].exact;
    if (slot < 0) slot = NewMask();
    for (int id : p.category_ids) {
      std::size_t idx = *lexicon.IndexOfId(id);
      masks_[slot + (idx >> 6)] |= std::uint64_t{1} << (idx & 63);
    }
  }
}

std::int32_t Matcher::NewMask() {
  auto offset = static_cast<std::int32_t>(masks_.size());
  masks_.resize(masks_.size() + mask_words_, 0);
  return offset;
}

std::uint32_t Matcher::Child(std::uint32_t node, unsigned char c) const {
  for (const auto& [ch, idx] : nodes_[node].children) {
    if (ch == c) return idx;
    if (ch > c) break;
  }
  return 0;
}

bool Matcher::Lookup(std::string_view word, CategoryMask& out) const {
  out.Clear();
  std::uint32_t node = 0;
  for (unsigned char c : word) {
    node = Child(node, c);
    if (node == 0) return out.Any();
    if (nodes_[node].wildcard >= 0) out.Or(&masks_[nodes_[node].wildcard]);
  }
  if (nodes_[node].exact >= 0) out.Or(&masks_[nodes_[node].exact]);
  return out.Any();
}

}  // namespace stylolab::lexicon
