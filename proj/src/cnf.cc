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

#include "hedonic/cnf.h"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <optional>
#include <string>

#include "hedonic/error.h"

namespace hedonic {

Valuation ParseAssignment(std::string_view text, int variables) {
  if (static_cast<int>(text.size()) != variables) {
    throw InputError("assignment '" + std::string(text) + "' has " +
                     std::to_string(text.size()) + " digits, expected " +
                     std::to_string(variables));
  }
  Valuation v(variables);
  for (int var = 1; var <= variables; ++var) {
    const char c = text[var - 1];
    if (c != '0' && c != '1') {
      throw InputError("assignment digits must be 0 or 1");
    }
    v.set(var, c == '1');
  }
  return v;
}

std::string FormatAssignment(const Valuation& valuation) {
  std::string out;
  for (int var = 1; var <= valuation.size(); ++var) {
    out += valuation[var] ? '1' : '0';
  }
  return out;
}

bool Evaluate(const CnfFormula& formula, const Valuation& valuation) {
  if (valuation.size() < formula.variables) {
    throw InputError("valuation covers " + std::to_string(valuation.size()) +
                     " of " + std::to_string(formula.variables) +
                     " variables");
  }
  for (const Clause& clause : formula.clauses) {
    bool satisfied = false;
    for (Literal l : clause) {
      if (valuation.Satisfies(l)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

CnfFormula ParseDimacs(std::string_view text) {
  CnfFormula formula;
  std::optional<long> declared_clauses;
  Clause current;
  int current_line = 0;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::size_t k = 0;
    auto skip_space = [&] {
      while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k])))
        ++k;
    };
    skip_space();
    if (k == line.size() || line[k] == 'c' || line[k] == '%') continue;

    if (line[k] == 'p') {
      if (declared_clauses) throw ParseError("duplicate header", line_no, 1);
      char fmt[8] = {};
      long vars = -1, clauses = -1;
      std::string copy(line.substr(k));
      if (std::sscanf(copy.c_str(), "p %7s %ld %ld", fmt, &vars, &clauses) != 3 ||
          std::string_view(fmt) != "cnf" || vars < 0 || clauses < 0) {
        throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'",
                         line_no, static_cast<int>(k) + 1);
      }
      formula.variables = static_cast<int>(vars);
      declared_clauses = clauses;
      continue;
    }
    if (!declared_clauses) {
      throw ParseError("clause before 'p cnf' header", line_no,
                       static_cast<int>(k) + 1);
    }
    while (k < line.size()) {
      skip_space();
      if (k == line.size()) break;
      const std::size_t start = k;
      while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k])))
        ++k;
      long value = 0;
      const char* first = line.data() + start;
      const char* last = line.data() + k;
      auto [ptr, ec] = std::from_chars(first, last, value);
      const int col = static_cast<int>(start) + 1;
      if (ec != std::errc() || ptr != last) {
        throw ParseError("expected an integer literal", line_no, col);
      }
      if (value == 0) {
        if (current.empty()) throw ParseError("empty clause", line_no, col);
        formula.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::labs(value) > formula.variables) {
        throw ParseError("literal " + std::to_string(value) +
                             " out of range 1.." +
                             std::to_string(formula.variables),
                         line_no, col);
      }
      if (current.empty()) current_line = line_no;
      current.push_back(static_cast<Literal>(value));
    }
  }
  if (!declared_clauses) throw ParseError("missing 'p cnf' header", line_no, 0);
  if (!current.empty()) {
    throw ParseError("clause not terminated by 0", current_line, 0);
  }
  if (static_cast<long>(formula.clauses.size()) != *declared_clauses) {
    throw ParseError("header declares " + std::to_string(*declared_clauses) +
                         " clauses but " +
                         std::to_string(formula.clauses.size()) + " were read",
                     line_no, 0);
  }
  return formula;
}

std::string FormatDimacs(const CnfFormula& formula) {
  std::string out = "p cnf " + std::to_string(formula.variables) + " " +
                    std::to_string(formula.clauses.size()) + "\n";
  for (const Clause& clause : formula.clauses) {
    for (Literal l : clause) out += std::to_string(l) + " ";
    out += "0\n";
  }
  return out;
}

}  // namespace hedonic
