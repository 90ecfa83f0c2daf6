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

#ifndef DESIGNPROBE_TRANSFORMS_SKELETON_H_
#define DESIGNPROBE_TRANSFORMS_SKELETON_H_

#include <set>
#include <string>
#include <vector>

#include "designprobe/corpus/model.h"
#include "designprobe/corpus/render.h"

namespace designprobe::transforms {

// Edit generators over `unit`'s text, limited to `c`'s declaration and the
// classes nested in it. Spans inside `skip` are left alone.

// Removes every comment. A comment alone on its line takes the line with
// it; a trailing comment takes the blanks before it.
std::vector<corpus::Edit> CommentRemovalEdits(
    const corpus::CompilationUnit& unit, const corpus::ClassModel& c,
    const std::vector<corpus::Span>& skip = {});

// Replaces method bodies with `{ }`, or `{ return <default>; }` for non-void
// methods. Constructors, initializer blocks and `c`'s callables listed in
// `preserve` keep their bodies.
std::vector<corpus::Edit> BodyRemovalEdits(const corpus::CompilationUnit& unit,
                                           const corpus::ClassModel& c,
                                           const std::set<std::string>& preserve);

// Neutralizes every outermost `new` expression. Field initializers and local
// variable initializers are dropped, standalone statements are deleted, and
// anything else becomes `null`.
std::vector<corpus::Edit> InstantiationRemovalEdits(
    const corpus::CompilationUnit& unit, const corpus::ClassModel& c,
    const std::vector<corpus::Span>& skip = {});

// Indentation of the first member of `c`, or four spaces.
std::string MemberIndent(const corpus::CompilationUnit& unit,
                         const corpus::ClassModel& c);

// Insertion edit placing `members` (whole lines) just before the closing
// brace of `c`.
corpus::Edit MemberInsertion(const corpus::CompilationUnit& unit,
                             const corpus::ClassModel& c,
                             const std::string& members);

// The text of `span` with comments inside it removed.
std::string TextWithoutComments(const corpus::CompilationUnit& unit,
                                corpus::Span span);

// `{ }` or `{ return 0; }` style body for a return type.
std::string DefaultBody(const std::string& return_type_name);

// Signature-only rendering of `c`, with comments removed.
// Throws Error(kReparseFailure).
std::string Skeletonize(const corpus::CompilationUnit& unit,
                        const corpus::ClassModel& c,
                        const std::set<std::string>& preserve = {});

// `c` with every object creation removed. Throws Error(kReparseFailure).
std::string StripInstantiations(const corpus::CompilationUnit& unit,
                                const corpus::ClassModel& c);

// Distractor form: instantiations stripped, then skeletonized.
std::string RenderDistractor(const corpus::CompilationUnit& unit,
                             const corpus::ClassModel& c);

// `c` with comments removed and bodies intact.
std::string StripComments(const corpus::CompilationUnit& unit,
                          const corpus::ClassModel& c);

}  // namespace designprobe::transforms

#endif  // DESIGNPROBE_TRANSFORMS_SKELETON_H_
