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

#include "stylolab/common/csv.h"

#include "stylolab/common/error.h"

namespace stylolab {

std::vector<CsvRow> ParseCsv(std::string_view text) {
  std::vector<CsvRow> rows;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    CsvRow row;
    row.line = line;
    std::string cell;
    bool any = false;
    bool quoted_cell = false;
    while (i < n) {
      char c = text[i];
      if (c == '"' && cell.empty() && !quoted_cell) {
        quoted_cell = true;
        any = true;
        ++i;
        bool closed = false;
        while (i < n) {
          if (text[i] == '"') {
            if (i + 1 < n && text[i + 1] == '"') {
              cell.push_back('"');
              i += 2;
            } else {
              ++i;
              closed = true;
              break;
            }
          } else {
            if (text[i] == '\n') ++line;
            cell.push_back(text[i++]);
          }
        }
        if (!closed) throw ParseError("unterminated quoted field", row.line);
        continue;
      }
      if (c == ',') {
        row.cells.push_back(std::move(cell));
        cell.clear();
        quoted_cell = false;
        any = true;
        ++i;
        continue;
      }
      if (c == '\r' && i + 1 < n && text[i + 1] == '\n') {
        ++i;
        continue;
      }
      if (c == '\n') {
        ++i;
        ++line;
        break;
      }
      cell.push_back(c);
      any = true;
      ++i;
    }
    if (any) {
      row.cells.push_back(std::move(cell));
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string CsvEscape(std::string_view cell) {
  if (cell.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(cell);
  }
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void CsvWriter::AddRow(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_.push_back(',');
    out_ += CsvEscape(cells[i]);
  }
  out_.push_back('\n');
}

}  // namespace stylolab
