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

#include "hedonic/text_format.h"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "hedonic/error.h"

namespace hedonic {
namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

struct Token {
  std::string_view text;
  int column;  // 1-based
};

// Splits `text` (which starts at `first_column` of its line) on whitespace.
std::vector<Token> Tokenize(std::string_view text, int first_column) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && IsSpace(text[pos])) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !IsSpace(text[pos])) ++pos;
    out.push_back(
        {text.substr(start, pos - start), first_column + static_cast<int>(start)});
  }
  return out;
}

std::optional<long> ToInteger(std::string_view text) {
  long value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::string_view TrimRight(std::string_view s) {
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

int LeadingSpace(std::string_view s) {
  int k = 0;
  while (k < static_cast<int>(s.size()) && IsSpace(s[k])) ++k;
  return k;
}

// Parses "<key>: <value>" and returns the value token, with its column.
Token HeaderValue(std::string_view line, std::string_view key, int line_no) {
  const int indent = LeadingSpace(line);
  std::string_view body = line.substr(indent);
  if (body.substr(0, key.size()) != key ||
      body.substr(key.size(), 1) != ":") {
    throw ParseError("expected '" + std::string(key) + ": ...'", line_no,
                     indent + 1);
  }
  const int value_col = indent + static_cast<int>(key.size()) + 2;
  auto tokens = Tokenize(body.substr(key.size() + 1), value_col);
  if (tokens.size() != 1) {
    throw ParseError("expected a single value after '" + std::string(key) +
                         ":'",
                     line_no, value_col);
  }
  return tokens.front();
}

}  // namespace

GameInstance ParseGame(std::string_view text) {
  std::optional<Variant> variant;
  int n = -1;
  std::vector<std::vector<IndifferenceClass>> ranks;
  std::vector<bool> seen_player;
  int pref_lines = 0;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = TrimRight(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;

    const int indent = LeadingSpace(line);
    if (indent == static_cast<int>(line.size()) || line[indent] == '#') {
      if (eol == text.size()) break;
      continue;
    }

    if (!variant) {
      Token value = HeaderValue(line, "variant", line_no);
      try {
        variant = ParseVariant(value.text);
      } catch (const InputError& e) {
        throw ParseError(e.what(), line_no, value.column);
      }
    } else if (n < 0) {
      Token value = HeaderValue(line, "players", line_no);
      auto parsed = ToInteger(value.text);
      if (!parsed || *parsed < 1 || *parsed > 100000) {
        throw ParseError("player count must be a positive integer", line_no,
                         value.column);
      }
      n = static_cast<int>(*parsed);
      ranks.assign(static_cast<std::size_t>(n), {});
      seen_player.assign(static_cast<std::size_t>(n), false);
    } else {
      std::string_view body = line.substr(indent);
      if (body.substr(0, 4) != "pref" || body.size() < 5 || !IsSpace(body[4])) {
        throw ParseError("expected 'pref <i>: ...'", line_no, indent + 1);
      }
      const std::size_t colon = body.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("missing ':' after player id", line_no,
                         indent + static_cast<int>(body.size()) + 1);
      }
      auto id_tokens = Tokenize(body.substr(4, colon - 4), indent + 5);
      if (id_tokens.size() != 1) {
        throw ParseError("expected exactly one player id", line_no, indent + 5);
      }
      auto player = ToInteger(id_tokens[0].text);
      if (!player || *player < 1 || *player > n) {
        throw ParseError("player id must be in 1.." + std::to_string(n),
                         line_no, id_tokens[0].column);
      }
      const int i = static_cast<int>(*player);
      if (seen_player[i - 1]) {
        throw ParseError("duplicate preferences for player " +
                             std::to_string(i),
                         line_no, id_tokens[0].column);
      }
      seen_player[i - 1] = true;
      ++pref_lines;

      std::vector<IndifferenceClass> classes;
      std::vector<bool> listed(static_cast<std::size_t>(n), false);
      bool star = false;
      std::size_t cls_start = colon + 1;
      while (cls_start <= body.size()) {
        std::size_t cls_end = body.find(';', cls_start);
        if (cls_end == std::string_view::npos) cls_end = body.size();
        const int col = indent + static_cast<int>(cls_start) + 1;
        auto tokens = Tokenize(body.substr(cls_start, cls_end - cls_start), col);
        if (tokens.empty()) {
          throw ParseError("empty indifference class", line_no, col);
        }
        if (star) {
          throw ParseError("'*' must be the last class", line_no,
                           tokens[0].column);
        }
        IndifferenceClass cls;
        for (const Token& token : tokens) {
          if (token.text == "*") {
            if (tokens.size() != 1) {
              throw ParseError("'*' must form a class on its own", line_no,
                               token.column);
            }
            star = true;
            break;
          }
          auto j = ToInteger(token.text);
          if (!j || *j < 1 || *j > n) {
            throw ParseError("'" + std::string(token.text) +
                                 "' is not a player id in 1.." +
                                 std::to_string(n),
                             line_no, token.column);
          }
          if (listed[*j - 1]) {
            throw ParseError("id " + std::to_string(*j) + " listed twice",
                             line_no, token.column);
          }
          listed[*j - 1] = true;
          cls.push_back(static_cast<PlayerId>(*j));
        }
        if (star) {
          for (int j = 1; j <= n; ++j) {
            if (!listed[j - 1]) cls.push_back(j);
          }
          if (cls.empty()) {
            throw ParseError("'*' matches no players", line_no,
                             tokens[0].column);
          }
          std::fill(listed.begin(), listed.end(), true);
        }
        classes.push_back(std::move(cls));
        if (cls_end == body.size()) break;
        cls_start = cls_end + 1;
      }
      for (int j = 1; j <= n; ++j) {
        if (!listed[j - 1]) {
          throw ParseError("player " + std::to_string(i) + " does not rank id " +
                               std::to_string(j),
                           line_no, 1);
        }
      }
      ranks[i - 1] = std::move(classes);
    }
    if (eol == text.size()) break;
  }

  if (!variant) throw ParseError("missing 'variant:' line", line_no, 1);
  if (n < 0) throw ParseError("missing 'players:' line", line_no, 1);
  if (pref_lines != n) {
    for (int i = 1; i <= n; ++i) {
      if (!seen_player[i - 1]) {
        throw ParseError("missing preferences for player " + std::to_string(i),
                         line_no, 1);
      }
    }
  }
  return GameInstance{*variant, PrefProfile(std::move(ranks))};
}

std::string FormatPreferences(const PrefProfile& profile, PlayerId i) {
  std::string out;
  bool first_class = true;
  for (const auto& cls : profile.classes(i)) {
    if (!first_class) out += " ; ";
    first_class = false;
    bool first = true;
    for (PlayerId j : cls) {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(j);
    }
  }
  return out;
}

std::string FormatGame(const GameInstance& game) {
  std::string out = "variant: " + std::string(ToString(game.variant)) + "\n";
  out += "players: " + std::to_string(game.size()) + "\n";
  for (int i = 1; i <= game.size(); ++i) {
    out += "pref " + std::to_string(i) + ": " +
           FormatPreferences(game.profile, i) + "\n";
  }
  return out;
}

namespace {

// Brace-delimited blocks of ids in 1..n, in input order.
std::vector<std::vector<PlayerId>> ParseBlocks(std::string_view text, int n) {
  std::vector<std::vector<PlayerId>> blocks;
  std::optional<std::vector<PlayerId>> open;
  int open_line = 0, open_col = 0;
  int line = 1, col = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    ++col;
    if (c == '\n') {
      ++line;
      col = 0;
      ++pos;
    } else if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      --col;
    } else if (IsSpace(c)) {
      ++pos;
    } else if (c == '{') {
      if (open) throw ParseError("nested '{'", line, col);
      open.emplace();
      open_line = line;
      open_col = col;
      ++pos;
    } else if (c == '}') {
      if (!open) throw ParseError("unmatched '}'", line, col);
      if (open->empty()) throw ParseError("empty block", line, col);
      blocks.push_back(std::move(*open));
      open.reset();
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open) throw ParseError("player id outside braces", line, col);
      const std::size_t start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      auto id = ToInteger(text.substr(start, pos - start));
      if (!id || *id < 1 || *id > n) {
        throw ParseError("player id must be in 1.." + std::to_string(n), line,
                         col);
      }
      open->push_back(static_cast<PlayerId>(*id));
      col += static_cast<int>(pos - start) - 1;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line,
                       col);
    }
  }
  if (open) throw ParseError("unterminated block", open_line, open_col);
  return blocks;
}

}  // namespace

Partition ParsePartition(std::string_view text, int n) {
  return Partition(n, ParseBlocks(text, n));
}

Coalition ParseCoalition(std::string_view text, int n) {
  auto blocks = ParseBlocks(text, n);
  if (blocks.size() != 1) {
    throw InputError("expected exactly one coalition, got " +
                     std::to_string(blocks.size()));
  }
  return Coalition(std::move(blocks.front()));
}

std::string FormatCoalition(const Coalition& coalition) {
  std::string out = "{";
  bool first = true;
  for (PlayerId i : coalition) {
    if (!first) out += ' ';
    first = false;
    out += std::to_string(i);
  }
  return out + "}";
}

std::string FormatPartition(const Partition& partition) {
  std::string out;
  for (const Coalition& block : partition.blocks()) {
    if (!out.empty()) out += ' ';
    out += FormatCoalition(block);
  }
  return out;
}

}  // namespace hedonic
