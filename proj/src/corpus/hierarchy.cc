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

#include "designprobe/corpus/hierarchy.h"

#include <algorithm>
#include <deque>
#include <functional>

#include "designprobe/common/error.h"
#include "designprobe/common/text.h"

namespace designprobe::corpus {
namespace {

std::optional<std::string> ResolveSimple(const SourceProject& project,
                                         const ClassModel& context,
                                         std::string_view name) {
  for (const ClassModel* scope = &context; scope != nullptr;
       scope = scope->enclosing_class.empty()
                   ? nullptr
                   : project.FindClass(scope->enclosing_class)) {
    if (scope->simple_name == name) return scope->qualified_name;
    const std::string member = scope->qualified_name + "." + std::string(name);
    if (project.FindClass(member)) return member;
  }
  const CompilationUnit* unit = project.FindUnit(context.unit_path);
  if (unit != nullptr) {
    for (const Import& imp : unit->imports) {
      if (imp.is_static || imp.is_wildcard) continue;
      if (SimpleName(imp.name) == name) {
        if (project.FindClass(imp.name)) return imp.name;
        return std::nullopt;
      }
    }
  }
  const std::string same_package = context.package_name.empty()
                                       ? std::string(name)
                                       : context.package_name + "." +
                                             std::string(name);
  if (project.FindClass(same_package)) return same_package;
  if (unit != nullptr) {
    for (const Import& imp : unit->imports) {
      if (imp.is_static || !imp.is_wildcard) continue;
      const std::string candidate = imp.name + "." + std::string(name);
      if (project.FindClass(candidate)) return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace

bool IsUniversalRoot(std::string_view type_name) {
  return type_name == "Object" || type_name == "java.lang.Object";
}

std::optional<std::string> ResolveTypeName(const SourceProject& project,
                                           const ClassModel& context,
                                           std::string_view type_name) {
  const std::string base = BaseTypeName(type_name);
  if (base.empty() || IsUniversalRoot(base) || IsPrimitiveType(base)) {
    return std::nullopt;
  }
  const std::size_t dot = base.find('.');
  if (dot == std::string::npos) return ResolveSimple(project, context, base);
  if (auto head = ResolveSimple(project, context, base.substr(0, dot))) {
    const std::string candidate = *head + base.substr(dot);
    if (project.FindClass(candidate)) return candidate;
  }
  if (project.FindClass(base)) return base;
  return std::nullopt;
}

const std::vector<std::string>& TypeHierarchy::AncestorsOf(
    std::string_view name) const {
  static const std::vector<std::string> kEmpty;
  auto it = ancestors.find(name);
  return it == ancestors.end() ? kEmpty : it->second;
}

const std::set<std::string>& TypeHierarchy::ImplementorsOf(
    std::string_view name) const {
  static const std::set<std::string> kEmpty;
  auto it = implementors.find(name);
  return it == implementors.end() ? kEmpty : it->second;
}

TypeHierarchy ResolveHierarchy(const SourceProject& project) {
  // Direct supertypes per class: resolved project names or external names.
  struct Super {
    std::string name;
    bool local;
  };
  std::map<std::string, std::vector<Super>> direct;
  for (const ClassModel* c : project.Classes()) {
    std::vector<Super>& supers = direct[c->qualified_name];
    auto add = [&](const std::string& written) {
      const std::string base = BaseTypeName(written);
      if (IsUniversalRoot(base)) return;
      if (auto resolved = ResolveTypeName(project, *c, base)) {
        supers.push_back({*resolved, true});
      } else {
        supers.push_back({base, false});
      }
    };
    for (const std::string& s : c->supertype_names) add(s);
    for (const std::string& s : c->interface_names) add(s);
  }

  // Cycle check over project-local edges.
  std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
  std::vector<std::string> stack;
  std::function<void(const std::string&)> visit = [&](const std::string& n) {
    state[n] = 1;
    stack.push_back(n);
    for (const Super& s : direct[n]) {
      if (!s.local) continue;
      if (state[s.name] == 1) {
        auto from = std::find(stack.begin(), stack.end(), s.name);
        std::vector<std::string> cycle(from, stack.end());
        cycle.push_back(s.name);
        throw Error(ErrorCode::kCyclicInheritance, Join(cycle, " -> "));
      }
      if (state[s.name] == 0) visit(s.name);
    }
    stack.pop_back();
    state[n] = 2;
  };
  for (const auto& [name, supers] : direct) {
    if (state[name] == 0) visit(name);
  }

  TypeHierarchy h;
  for (const auto& [name, supers] : direct) {
    std::vector<std::string>& out = h.ancestors[name];
    std::set<std::string> seen;
    std::deque<Super> queue(supers.begin(), supers.end());
    while (!queue.empty()) {
      Super s = queue.front();
      queue.pop_front();
      if (!seen.insert(s.name).second) continue;
      out.push_back(s.name);
      if (!s.local) continue;
      for (const Super& next : direct[s.name]) queue.push_back(next);
    }
  }
  for (const ClassModel* c : project.Classes()) {
    if (c->kind != ClassKind::kConcreteClass) continue;
    for (const std::string& a : h.ancestors[c->qualified_name]) {
      const ClassModel* t = project.FindClass(a);
      if (t != nullptr && (t->kind == ClassKind::kInterface ||
                           t->kind == ClassKind::kAbstractClass)) {
        h.implementors[a].insert(c->qualified_name);
      }
    }
  }
  return h;
}

}  // namespace designprobe::corpus
