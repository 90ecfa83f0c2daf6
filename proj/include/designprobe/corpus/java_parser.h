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

#ifndef DESIGNPROBE_CORPUS_JAVA_PARSER_H_
#define DESIGNPROBE_CORPUS_JAVA_PARSER_H_

#include <string>

#include "designprobe/corpus/model.h"

namespace designprobe::corpus {

// Parses one Java compilation unit into its declaration-level model.
//
// The parser is structural: it recognizes package/import headers, type
// declarations (classes, interfaces, enums, records, annotation types and
// their nesting), fields, methods, constructors and initializer blocks.
// Executable code is not parsed into a tree; bodies are scanned at token
// level for field accesses, intra-class invocations, `new` expressions,
// static type accesses and simple `[this.]f = p;` statements.
//
// Throws Error(kParse) with a line number when the text is not a
// syntactically plausible compilation unit.
CompilationUnit ParseCompilationUnit(std::string path, std::string text);

}  // namespace designprobe::corpus

#endif  // DESIGNPROBE_CORPUS_JAVA_PARSER_H_
