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

#include "designprobe/promptgen/templates.h"

#include <optional>

#include "designprobe/common/error.h"
#include "designprobe/common/text.h"

namespace designprobe::promptgen {
namespace {

// Length of the placeholder starting at `i`, including braces.
std::optional<std::size_t> PlaceholderAt(std::string_view text,
                                         std::size_t i) {
  if (text[i] != '{') return std::nullopt;
  std::size_t j = i + 1;
  while (j < text.size() && ((text[j] >= 'a' && text[j] <= 'z') ||
                             text[j] == '_')) {
    ++j;
  }
  if (j == i + 1 || j >= text.size() || text[j] != '}') return std::nullopt;
  return j + 1 - i;
}

}  // namespace

std::set<std::string> PromptTemplate::Placeholders() const {
  std::set<std::string> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (auto n = PlaceholderAt(text, i)) {
      out.insert(text.substr(i + 1, *n - 2));
      i += *n - 1;
    }
  }
  return out;
}

std::string TemplateFileName(Concept c, TaskKind t) {
  std::string task(TaskKindName(t));
  for (char& ch : task) {
    if (ch == '-') ch = '_';
  }
  return std::string(ConceptName(c)) + "_" + task + ".txt";
}

PromptTemplate LoadTemplate(const std::filesystem::path& dir, Concept c,
                            TaskKind t) {
  PromptTemplate tmpl;
  tmpl.design_concept = c;
  tmpl.task = t;
  tmpl.text = ReadFile(dir / TemplateFileName(c, t));
  return tmpl;
}

std::filesystem::path DefaultTemplateDir() { return DESIGNPROBE_TEMPLATE_DIR; }

std::string RenderTemplate(const PromptTemplate& t, const Bindings& bindings) {
  const std::string& text = t.text;
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (auto n = PlaceholderAt(text, i)) {
      const std::string name = text.substr(i + 1, *n - 2);
      auto it = bindings.find(name);
      if (it == bindings.end()) {
        throw Error(ErrorCode::kUnboundPlaceholder,
                    "{" + name + "} in " + TemplateFileName(t.design_concept,
                                                            t.task));
      }
      out += it->second;
      i += *n - 1;
      continue;
    }
    out += text[i];
  }
  return out;
}

}  // namespace designprobe::promptgen
