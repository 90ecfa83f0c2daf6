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

#include "designprobe/analysis/injection_sites.h"

#include <set>

namespace designprobe::analysis {
namespace {

bool IsAbstractType(const corpus::SourceProject& project,
                    const std::string& qualified) {
  const corpus::ClassModel* t = project.FindClass(qualified);
  return t != nullptr && (t->kind == corpus::ClassKind::kInterface ||
                          t->kind == corpus::ClassKind::kAbstractClass);
}

bool IsPlainType(const std::string& type_text) {
  return type_text.find('[') == std::string::npos &&
         type_text.find("...") == std::string::npos;
}

bool IsSetterStyle(const corpus::MethodModel& m) {
  return !m.is_constructor && !m.modifiers.is_static && m.body_span &&
         !m.field_assignments.empty() &&
         m.top_level_statement_count == m.field_assignments.size();
}

std::optional<InjectionSite> CheckCallable(
    const corpus::SourceProject& project,
    const corpus::TypeHierarchy& hierarchy, const corpus::ClassModel& c,
    const corpus::MethodModel& m) {
  if (m.parameters.empty() || !m.body_span) return std::nullopt;
  InjectionSite site;
  site.class_name = c.qualified_name;
  site.callable_id = m.CallableId();
  site.is_constructor = m.is_constructor;
  std::set<std::string> used_fields;
  for (const corpus::Parameter& p : m.parameters) {
    if (!IsPlainType(p.type_name)) return std::nullopt;
    auto type = corpus::ResolveTypeName(project, c, p.type_name);
    if (!type || !IsAbstractType(project, *type)) return std::nullopt;
    if (hierarchy.ImplementorsOf(*type).empty()) return std::nullopt;
    const corpus::FieldAssignment* assignment = nullptr;
    for (const corpus::FieldAssignment& a : m.field_assignments) {
      if (a.value != p.name) continue;
      if (assignment != nullptr) return std::nullopt;
      assignment = &a;
    }
    if (assignment == nullptr) return std::nullopt;
    const corpus::FieldModel* field = c.FindField(assignment->field);
    if (field == nullptr || field->modifiers.is_static ||
        !IsPlainType(field->declared_type_name)) {
      return std::nullopt;
    }
    auto field_type =
        corpus::ResolveTypeName(project, c, field->declared_type_name);
    if (field_type != type) return std::nullopt;
    if (!used_fields.insert(field->name).second) return std::nullopt;
    site.parameters.push_back({p.name, *type});
    site.assignment_map[p.name] = field->name;
  }
  return site;
}

}  // namespace

bool IsZeroArgConstructible(const corpus::ClassModel& c) {
  if (c.constructors.empty()) return true;
  for (const corpus::MethodModel& ctor : c.constructors) {
    if (ctor.parameters.empty() &&
        ctor.modifiers.visibility != corpus::Visibility::kPrivate) {
      return true;
    }
  }
  return false;
}

std::vector<InjectionSite> FindInjectionSites(
    const corpus::SourceProject& project,
    const corpus::TypeHierarchy& hierarchy) {
  std::vector<InjectionSite> sites;
  for (const corpus::ClassModel* c : project.Classes()) {
    if (!c->IsTopLevel() || c->is_test ||
        c->kind != corpus::ClassKind::kConcreteClass) {
      continue;
    }
    for (const corpus::MethodModel& ctor : c->constructors) {
      if (auto site = CheckCallable(project, hierarchy, *c, ctor)) {
        sites.push_back(std::move(*site));
      }
    }
    for (const corpus::MethodModel& m : c->methods) {
      if (!IsSetterStyle(m)) continue;
      if (auto site = CheckCallable(project, hierarchy, *c, m)) {
        sites.push_back(std::move(*site));
      }
    }
  }
  return sites;
}

void to_json(nlohmann::json& j, const InjectionSite& site) {
  nlohmann::json params = nlohmann::json::array();
  for (const InjectedParameter& p : site.parameters) {
    params.push_back({{"name", p.name}, {"type", p.type_name}});
  }
  j = nlohmann::json{{"class_name", site.class_name},
                     {"callable_id", site.callable_id},
                     {"is_constructor", site.is_constructor},
                     {"parameters", params},
                     {"assignment_map", site.assignment_map}};
}

void from_json(const nlohmann::json& j, InjectionSite& site) {
  site.class_name = j.at("class_name").get<std::string>();
  site.callable_id = j.at("callable_id").get<std::string>();
  site.is_constructor = j.at("is_constructor").get<bool>();
  site.parameters.clear();
  for (const nlohmann::json& p : j.at("parameters")) {
    site.parameters.push_back(
        {p.at("name").get<std::string>(), p.at("type").get<std::string>()});
  }
  site.assignment_map =
      j.at("assignment_map").get<std::map<std::string, std::string>>();
}

}  // namespace designprobe::analysis
