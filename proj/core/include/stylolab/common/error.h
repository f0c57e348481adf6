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

#ifndef STYLOLAB_COMMON_ERROR_H_
#define STYLOLAB_COMMON_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stylolab {

// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The caller supplied bad data or violated a documented precondition.
// The CLI maps this family to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// A text format could not be parsed. line() is 1-based, 0 when unknown.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : InputError(line == 0 ? what
                             : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A statistic is undefined for the given input (zero variance and the like).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

}  // namespace stylolab

#endif  // STYLOLAB_COMMON_ERROR_H_
