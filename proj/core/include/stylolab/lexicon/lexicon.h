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

// Category dictionaries in the .dic layout:
//
//   %
//   1<TAB>posemo
//   2<TAB>negemo
//   %
//   happy<TAB>1
//   hate*<TAB>2
//
// A '%' line opens and closes the header of `id<TAB>name` entries; the body
// maps a pattern to one or more category ids. A pattern ending in '*'
// matches every word starting with the stem.

#ifndef STYLOLAB_LEXICON_LEXICON_H_
#define STYLOLAB_LEXICON_LEXICON_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stylolab::lexicon {

struct Category {
  int id = 0;
  std::string name;

  friend bool operator==(const Category&, const Category&) = default;
};

struct Pattern {
  std::string stem;  // lowercase, without the trailing '*'
  bool wildcard = false;
  std::vector<int> category_ids;  // sorted, unique

  std::string Text() const { return wildcard ? stem + "*" : stem; }

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

class Lexicon {
 public:
  Lexicon() = default;

  // Validates ids and names, lowercases patterns, merges duplicate patterns
  // and sorts patterns by text. Throws InputError on violations.
  Lexicon(std::vector<Category> categories, std::vector<Pattern> patterns);

  const std::vector<Category>& categories() const { return categories_; }
  const std::vector<Pattern>& patterns() const { return patterns_; }

  // Position of the category in categories(), or nullopt.
  std::optional<std::size_t> IndexOfId(int id) const;
  std::optional<std::size_t> IndexOfName(std::string_view name) const;

  friend bool operator==(const Lexicon&, const Lexicon&) = default;

 private:
  std::vector<Category> categories_;
  std::vector<Pattern> patterns_;
};

// Throws ParseError (with 1-based line) on a missing header delimiter,
// non-integer ids, undeclared ids, duplicate categories, or a '*' anywhere
// but the end of a pattern.
Lexicon ParseDic(std::string_view content);

// Canonical form: header in category order, patterns sorted, ids ascending.
std::string SerializeDic(const Lexicon& lexicon);

// Bitset over category indices of one lexicon.
class CategoryMask {
 public:
  CategoryMask() = default;
  explicit CategoryMask(std::size_t categories)
      : bits_((categories + 63) / 64, 0) {}

  void Clear() { std::fill(bits_.begin(), bits_.end(), 0); }
  void Set(std::size_t i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool Test(std::size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  bool Any() const;
  void Or(const std::uint64_t* other) {
    for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] |= other[w];
  }
  std::size_t words() const { return bits_.size(); }
  const std::vector<std::uint64_t>& bits() const { return bits_; }

  // Calls fn(index) for each set bit in increasing order.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t b = bits_[w];
      while (b) {
        fn(w * 64 + static_cast<std::size_t>(__builtin_ctzll(b)));
        b &= b - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> bits_;
};

// Prefix tree over a lexicon's patterns. Immutable once built; Lookup is
// safe to call concurrently.
class Matcher {
 public:
  explicit Matcher(const Lexicon& lexicon);

  std::size_t category_count() const { return category_count_; }

  // Sets in `out` every category whose pattern is exactly `word` or is a
  // wildcard whose stem is a prefix of `word`. `out` must have been built
  // for this lexicon; it is cleared first. Returns out.Any().
  bool Lookup(std::string_view word, CategoryMask& out) const;

 private:
  struct Node {
    std::vector<std::pair<unsigned char, std::uint32_t>> children;  // sorted
    std::int32_t exact = -1;     // offset into masks_, or -1
    std::int32_t wildcard = -1;  // offset into masks_, or -1
  };

  std::int32_t NewMask();
  std::uint32_t Child(std::uint32_t node, unsigned char c) const;

  std::size_t category_count_ = 0;
  std::size_t mask_words_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::uint64_t> masks_;
};

}  // namespace stylolab::lexicon

#endif  // STYLOLAB_LEXICON_LEXICON_H_
