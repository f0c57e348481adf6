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

#ifndef STYLOLAB_COMMON_IO_H_
#define STYLOLAB_COMMON_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace stylolab {

// Whole-file read. Throws InputError naming the path when unreadable.
std::string ReadFile(const std::filesystem::path& path);

// Writes atomically enough for our purposes (temp file + rename), creating
// parent directories.
void WriteFile(const std::filesystem::path& path, std::string_view content);

// Shortest decimal text that round-trips to the same double.
std::string FormatDouble(double value);

// printf-style fixed notation with `digits` decimals.
std::string FormatFixed(double value, int digits);

// Splits on '\n', dropping one trailing '\r' per line. A trailing newline
// does not produce an empty final line.
std::vector<std::string_view> SplitLines(std::string_view text);

// Reads a one-entry-per-line list, skipping blank lines and '#' comments.
std::vector<std::string> ParseWordList(std::string_view text);

std::string ToLowerAscii(std::string_view s);
std::string_view TrimAscii(std::string_view s);

}  // namespace stylolab

#endif  // STYLOLAB_COMMON_IO_H_
