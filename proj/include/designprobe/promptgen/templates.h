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

#ifndef DESIGNPROBE_PROMPTGEN_TEMPLATES_H_
#define DESIGNPROBE_PROMPTGEN_TEMPLATES_H_

#include <filesystem>
#include <map>
#include <set>
#include <string>

#include "designprobe/promptgen/prompt_instance.h"

namespace designprobe::promptgen {

struct PromptTemplate {
  Concept design_concept = Concept::kCoupling;
  TaskKind task = TaskKind::kVerification;
  // Plain text with `{name}` placeholders, name in [a-z_]+.
  std::string text;

  std::set<std::string> Placeholders() const;
};

using Bindings = std::map<std::string, std::string>;

// "<concept>_<task>.txt" with '-' in task names written as '_'.
std::string TemplateFileName(Concept c, TaskKind t);

// Reads the template for (c, t) from `dir`. Throws Error(kIo).
PromptTemplate LoadTemplate(const std::filesystem::path& dir, Concept c,
                            TaskKind t);

// Directory the build was configured with.
std::filesystem::path DefaultTemplateDir();

// Substitutes every placeholder. Bound values are inserted verbatim and not
// scanned again. Throws Error(kUnboundPlaceholder) naming the first
// placeholder without a binding.
std::string RenderTemplate(const PromptTemplate& t, const Bindings& bindings);

}  // namespace designprobe::promptgen

#endif  // DESIGNPROBE_PROMPTGEN_TEMPLATES_H_
