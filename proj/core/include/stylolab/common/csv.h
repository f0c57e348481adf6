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

#ifndef STYLOLAB_COMMON_CSV_H_
#define STYLOLAB_COMMON_CSV_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace stylolab {

struct CsvRow {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> cells;
};

// RFC 4180 reader: comma separated, double-quote escaping, CRLF tolerated.
// Blank lines are skipped. Throws ParseError on an unterminated quote.
std::vector<CsvRow> ParseCsv(std::string_view text);

// Builds CSV text with '\n' line endings; cells are quoted only when needed.
class CsvWriter {
 public:
  void AddRow(const std::vector<std::string>& cells);
  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

std::string CsvEscape(std::string_view cell);

}  // namespace stylolab

#endif  // STYLOLAB_COMMON_CSV_H_
