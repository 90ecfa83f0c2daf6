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

#ifndef DESIGNPROBE_CORPUS_RENDER_H_
#define DESIGNPROBE_CORPUS_RENDER_H_

#include <string>
#include <string_view>
#include <vector>

#include "designprobe/corpus/model.h"

namespace designprobe::corpus {

// Replace `span` of the original text with `replacement`. An empty span is
// an insertion.
struct Edit {
  Span span;
  std::string replacement;
};

// Applies non-overlapping edits; bytes outside every span are copied
// verbatim. Insertions at the same offset keep their input order.
// Throws Error(kOverlappingEdits) when spans overlap or leave the text.
std::string ApplyEdits(std::string_view text, std::vector<Edit> edits);

// Applies edits to the whole unit and checks the result reparses.
// Throws Error(kReparseFailure).
std::string RenderUnit(const CompilationUnit& unit,
                       const std::vector<Edit>& edits);

// Applies edits that fall inside `c`'s declaration and returns the edited
// declaration text, which must reparse as a standalone unit.
std::string RenderClass(const CompilationUnit& unit, const ClassModel& c,
                        const std::vector<Edit>& edits);

// Reparse check used by every transformation. Throws Error(kReparseFailure)
// carrying the parser diagnostic.
CompilationUnit Reparse(const std::string& path, std::string text);

}  // namespace designprobe::corpus

#endif  // DESIGNPROBE_CORPUS_RENDER_H_
