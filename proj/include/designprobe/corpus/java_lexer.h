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

#ifndef DESIGNPROBE_CORPUS_JAVA_LEXER_H_
#define DESIGNPROBE_CORPUS_JAVA_LEXER_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include "designprobe/corpus/model.h"

namespace designprobe::corpus {

enum class TokenKind { kIdentifier, kNumber, kString, kChar, kPunct, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string_view text;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool Is(std::string_view s) const {
    return kind != TokenKind::kEnd && text == s;
  }
  bool IsIdentifier() const { return kind == TokenKind::kIdentifier; }
};

struct LexResult {
  // Always terminated by a kEnd token.
  std::vector<Token> tokens;
  std::vector<Span> comments;
};

// Tokenizes Java source. '>' is always a single token so nested generic
// closers need no splitting; ">=" is kept whole. Throws Error(kParse) on
// unterminated literals or comments.
LexResult Lex(std::string_view text);

// Reserved words plus the literals true/false/null.
bool IsKeyword(std::string_view word);

// 1-based line of a byte offset, for diagnostics.
std::size_t LineOf(std::string_view text, std::size_t offset);

}  // namespace designprobe::corpus

#endif  // DESIGNPROBE_CORPUS_JAVA_LEXER_H_
