// Copyright 2026 The DesignProbe Authors
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

#include "designprobe/corpus/java_lexer.h"

#include <algorithm>
#include <array>
#include <string>

#include "designprobe/common/error.h"
#include "designprobe/common/text.h"

namespace designprobe::corpus {
namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract",   "assert",       "boolean",   "break",      "byte",
    "case",       "catch",        "char",      "class",      "const",
    "continue",   "default",      "do",        "double",     "else",
    "enum",       "extends",      "final",     "finally",    "float",
    "for",        "goto",         "if",        "implements", "import",
    "instanceof", "int",          "interface", "long",       "native",
    "new",        "package",      "private",   "protected",  "public",
    "return",     "short",        "static",    "strictfp",   "super",
    "switch",     "synchronized", "this",      "throw",      "throws",
    "transient",  "try",          "void",      "volatile",   "while",
    "true",       "false",        "null",
};

// Longest first within each shared prefix.
constexpr std::array<std::string_view, 21> kMultiCharPunct = {
    "...", "<<=", "->", "::", "==", "!=", "<=", ">=", "&&", "||", "++",
    "--",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<",
};

[[noreturn]] void Fail(std::string_view text, std::size_t offset,
                       const std::string& what) {
  throw Error(ErrorCode::kParse,
              what + " at line " + std::to_string(LineOf(text, offset)));
}

}  // namespace

bool IsKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) !=
         kKeywords.end();
}

std::size_t LineOf(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

LexResult Lex(std::string_view text) {
  LexResult result;
  const std::size_t n = text.size();
  std::size_t i = 0;
  auto push = [&](TokenKind kind, std::size_t b, std::size_t e) {
    result.tokens.push_back(Token{kind, text.substr(b, e - b), b, e});
  };
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      std::size_t e = text.find('\n', i);
      if (e == std::string_view::npos) e = n;
      result.comments.push_back(Span{i, e});
      i = e;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '*') {
      std::size_t e = text.find("*/", i + 2);
      if (e == std::string_view::npos) Fail(text, i, "unterminated comment");
      result.comments.push_back(Span{i, e + 2});
      i = e + 2;
      continue;
    }
    if (c == '"') {
      const std::size_t b = i;
      if (text.substr(i, 3) == "\"\"\"") {
        std::size_t j = i + 3;
        while (true) {
          if (j >= n) Fail(text, b, "unterminated text block");
          if (text[j] == '\\') {
            j += 2;
            continue;
          }
          if (text.substr(j, 3) == "\"\"\"") break;
          ++j;
        }
        i = j + 3;
        push(TokenKind::kString, b, i);
        continue;
      }
      std::size_t j = i + 1;
      while (j < n && text[j] != '"') {
        if (text[j] == '\n') Fail(text, b, "unterminated string literal");
        j += (text[j] == '\\') ? 2 : 1;
      }
      if (j >= n) Fail(text, b, "unterminated string literal");
      i = j + 1;
      push(TokenKind::kString, b, i);
      continue;
    }
    if (c == '\'') {
      const std::size_t b = i;
      std::size_t j = i + 1;
      while (j < n && text[j] != '\'') {
        if (text[j] == '\n') Fail(text, b, "unterminated character literal");
        j += (text[j] == '\\') ? 2 : 1;
      }
      if (j >= n) Fail(text, b, "unterminated character literal");
      i = j + 1;
      push(TokenKind::kChar, b, i);
      continue;
    }
    const bool digit = c >= '0' && c <= '9';
    const bool dot_digit =
        c == '.' && i + 1 < n && text[i + 1] >= '0' && text[i + 1] <= '9';
    if (digit || dot_digit) {
      const std::size_t b = i;
      const bool hex = text.substr(b, 2) == "0x" || text.substr(b, 2) == "0X";
      ++i;
      while (i < n) {
        const unsigned char d = static_cast<unsigned char>(text[i]);
        const char prev = text[i - 1];
        const bool exponent_sign =
            (d == '+' || d == '-') &&
            (hex ? (prev == 'p' || prev == 'P') : (prev == 'e' || prev == 'E'));
        const bool next_is_digit =
            i + 1 < n && text[i + 1] >= '0' && text[i + 1] <= '9';
        const bool next_is_word =
            i + 1 < n && IsWordByte(static_cast<unsigned char>(text[i + 1]));
        if (IsWordByte(d) || exponent_sign ||
            (d == '.' && (next_is_digit || !next_is_word))) {
          ++i;
          continue;
        }
        break;
      }
      push(TokenKind::kNumber, b, i);
      continue;
    }
    if (IsWordByte(c)) {
      const std::size_t b = i;
      while (i < n && IsWordByte(static_cast<unsigned char>(text[i]))) ++i;
      push(TokenKind::kIdentifier, b, i);
      continue;
    }
    bool matched = false;
    for (std::string_view p : kMultiCharPunct) {
      if (text.substr(i, p.size()) == p) {
        push(TokenKind::kPunct, i, i + p.size());
        i += p.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    push(TokenKind::kPunct, i, i + 1);
    ++i;
  }
  result.tokens.push_back(Token{TokenKind::kEnd, std::string_view(), n, n});
  return result;
}

}  // namespace designprobe::corpus
