// Copyright 2026 The Hedonic Authors
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

#ifndef HEDONIC_ERROR_H_
#define HEDONIC_ERROR_H_

#include <stdexcept>
#include <string>

namespace hedonic {

// Raised for out-of-range ids, violated preconditions and malformed objects.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text that fails to parse. Line and column are 1-based; 0 means unknown.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, int line, int column)
      : InputError(Describe(message, line, column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string Describe(const std::string& message, int line,
                              int column) {
    if (line <= 0) return message;
    std::string where = "line " + std::to_string(line);
    if (column > 0) where += ", column " + std::to_string(column);
    return where + ": " + message;
  }

  int line_;
  int column_;
};

// An exhaustive search was asked to go past its configured size cap.
class CapacityError : public std::length_error {
 public:
  CapacityError(const std::string& what, int cap)
      : std::length_error(what + " (cap " + std::to_string(cap) + ")"),
        cap_(cap) {}

  int cap() const { return cap_; }

 private:
  int cap_;
};

}  // namespace hedonic

#endif  // HEDONIC_ERROR_H_
