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

#ifndef DESIGNPROBE_CORPUS_HIERARCHY_H_
#define DESIGNPROBE_CORPUS_HIERARCHY_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "designprobe/corpus/project.h"

namespace designprobe::corpus {

// Resolves a type name as written inside `context` to a project class.
// Lookup order: the context class and its enclosing classes (and their
// member types), single-type imports, the same package, wildcard imports,
// then an exact qualified match. Returns nullopt for external types and
// for the universal root java.lang.Object.
std::optional<std::string> ResolveTypeName(const SourceProject& project,
                                           const ClassModel& context,
                                           std::string_view type_name);

bool IsUniversalRoot(std::string_view type_name);

struct TypeHierarchy {
  // Qualified name -> ancestors in breadth-first order, superclass before
  // interfaces. Project types appear qualified; external types appear as
  // written and are not expanded further. java.lang.Object is excluded.
  std::map<std::string, std::vector<std::string>, std::less<>> ancestors;
  // Interface or abstract class -> concrete project classes below it.
  std::map<std::string, std::set<std::string>, std::less<>> implementors;

  const std::vector<std::string>& AncestorsOf(std::string_view name) const;
  const std::set<std::string>& ImplementorsOf(std::string_view name) const;
};

// Throws Error(kCyclicInheritance) naming the cycle.
TypeHierarchy ResolveHierarchy(const SourceProject& project);

}  // namespace designprobe::corpus

#endif  // DESIGNPROBE_CORPUS_HIERARCHY_H_
