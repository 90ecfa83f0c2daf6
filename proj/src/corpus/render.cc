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

#include "designprobe/corpus/render.h"

#include <algorithm>

#include "designprobe/common/error.h"
#include "designprobe/corpus/java_parser.h"

namespace designprobe::corpus {

std::string ApplyEdits(std::string_view text, std::vector<Edit> edits) {
  std::stable_sort(edits.begin(), edits.end(),
                   [](const Edit& a, const Edit& b) {
                     return a.span.begin < b.span.begin;
                   });
  std::string out;
  out.reserve(text.size());
  std::size_t cursor = 0;
  for (const Edit& e : edits) {
    if (e.span.begin > e.span.end || e.span.end > text.size()) {
      throw Error(ErrorCode::kOverlappingEdits,
                  "edit [" + std::to_string(e.span.begin) + "," +
                      std::to_string(e.span.end) + ") leaves the text");
    }
    if (e.span.begin < cursor) {
      throw Error(ErrorCode::kOverlappingEdits,
                  "edit at offset " + std::to_string(e.span.begin) +
                      " overlaps the previous edit ending at " +
                      std::to_string(cursor));
    }
    out.append(text.substr(cursor, e.span.begin - cursor));
    out.append(e.replacement);
    cursor = e.span.end;
  }
  out.append(text.substr(cursor));
  return out;
}

CompilationUnit Reparse(const std::string& path, std::string text) {
  try {
    return ParseCompilationUnit(path, std::move(text));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParse) throw;
    throw Error(ErrorCode::kReparseFailure, e.what());
  }
}

std::string RenderUnit(const CompilationUnit& unit,
                       const std::vector<Edit>& edits) {
  std::string text = ApplyEdits(unit.text, edits);
  if (!edits.empty()) Reparse(unit.path, text);
  return text;
}

std::string RenderClass(const CompilationUnit& unit, const ClassModel& c,
                        const std::vector<Edit>& edits) {
  const Span decl = c.declaration_span;
  std::vector<Edit> local;
  local.reserve(edits.size());
  for (const Edit& e : edits) {
    if (!decl.Contains(e.span)) {
      throw Error(ErrorCode::kOverlappingEdits,
                  "edit outside the declaration of " + c.qualified_name);
    }
    local.push_back(
        Edit{Span{e.span.begin - decl.begin, e.span.end - decl.begin},
             e.replacement});
  }
  std::string text = ApplyEdits(decl.Of(unit.text), std::move(local));
  if (!edits.empty()) Reparse(unit.path, text);
  return text;
}

}  // namespace designprobe::corpus
