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


// Well-formedness check for the XML subset charts use: an optional
// declaration, comments, elements, quoted attributes, character data and
// the predefined or numeric entities.

#ifndef STYLOLAB_TESTS_SUPPORT_XML_CHECK_H_
#define STYLOLAB_TESTS_SUPPORT_XML_CHECK_H_

#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace stylolab::testing {

inline bool IsNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == ':' || c == '.';
}

// Checks an entity starting at s[i] == '&'; advances i past ';'.
inline bool ValidEntity(std::string_view s, std::size_t& i) {
  const std::size_t semi = s.find(';', i);
  if (semi == std::string_view::npos) return false;
  const std::string_view name = s.substr(i + 1, semi - i - 1);
  static const std::set<std::string_view> kNamed = {"amp", "lt", "gt", "quot",
                                                    "apos"};
  bool ok = kNamed.contains(name);
  if (!ok && name.size() > 1 && name[0] == '#') {
    ok = true;
    for (char c : name.substr(1)) ok = ok && std::isdigit(static_cast<unsigned char>(c));
  }
  i = semi + 1;
  return ok;
}

// Empty when well-formed, otherwise a description of the first problem.
inline std::string XmlWellFormedError(std::string_view s) {
  std::size_t i = 0;
  if (s.starts_with("<?xml")) {
    i = s.find("?>");
    if (i == std::string_view::npos) return "unterminated declaration";
    i += 2;
  }
  std::vector<std::string> stack;
  int roots = 0;
  while (i < s.size()) {
    if (s[i] != '<') {
      if (s[i] == '&') {
        if (!ValidEntity(s, i)) return "bad entity";
        if (stack.empty()) return "entity outside the root";
        continue;
      }
      if (s[i] == '>') return "stray '>' in character data";
      if (stack.empty() && !std::isspace(static_cast<unsigned char>(s[i]))) {
        return "text outside the root element";
      }
      ++i;
      continue;
    }
    if (s.substr(i).starts_with("<!--")) {
      const std::size_t end = s.find("-->", i + 4);
      if (end == std::string_view::npos) return "unterminated comment";
      i = end + 3;
      continue;
    }
    if (s.substr(i).starts_with("</")) {
      std::size_t j = i + 2;
      while (j < s.size() && IsNameChar(s[j])) ++j;
      const std::string name(s.substr(i + 2, j - i - 2));
      while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
      if (j >= s.size() || s[j] != '>') return "malformed end tag " + name;
      if (stack.empty() || stack.back() != name) {
        return "mismatched end tag " + name;
      }
      stack.pop_back();
      i = j + 1;
      continue;
    }
    std::size_t j = i + 1;
    while (j < s.size() && IsNameChar(s[j])) ++j;
    const std::string name(s.substr(i + 1, j - i - 1));
    if (name.empty()) return "empty element name";
    if (stack.empty() && ++roots > 1) return "more than one root element";
    std::set<std::string> attrs;
    while (true) {
      const std::size_t before = j;
      while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
      if (j >= s.size()) return "unterminated start tag " + name;
      if (s[j] == '>') {
        stack.push_back(name);
        ++j;
        break;
      }
      if (s.substr(j).starts_with("/>")) {
        j += 2;
        break;
      }
      if (j == before) return "attributes need separating whitespace";
      std::size_t k = j;
      while (k < s.size() && IsNameChar(s[k])) ++k;
      const std::string attr(s.substr(j, k - j));
      if (attr.empty()) return "bad attribute in " + name;
      if (!attrs.insert(attr).second) return "duplicate attribute " + attr;
      if (k >= s.size() || s[k] != '=') return "attribute without value";
      ++k;
      if (k >= s.size() || (s[k] != '"' && s[k] != '\'')) {
        return "unquoted attribute " + attr;
      }
      const char quote = s[k++];
      while (k < s.size() && s[k] != quote) {
        if (s[k] == '<') return "'<' in attribute " + attr;
        if (s[k] == '&') {
          if (!ValidEntity(s, k)) return "bad entity in attribute " + attr;
          continue;
        }
        ++k;
      }
      if (k >= s.size()) return "unterminated attribute " + attr;
      j = k + 1;
    }
    i = j;
  }
  if (!stack.empty()) return "unclosed element " + stack.back();
  if (roots != 1) return "no root element";
  return {};
}

}  // namespace stylolab::testing

#endif  // STYLOLAB_TESTS_SUPPORT_XML_CHECK_H_
