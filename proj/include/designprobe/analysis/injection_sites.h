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

#ifndef DESIGNPROBE_ANALYSIS_INJECTION_SITES_H_
#define DESIGNPROBE_ANALYSIS_INJECTION_SITES_H_

#include <map>
#include <string>
#include <vector>

#include "designprobe/corpus/hierarchy.h"
#include "designprobe/corpus/project.h"
#include "json.hpp"

namespace designprobe::analysis {

struct InjectedParameter {
  std::string name;
  // Qualified name of the project-local interface or abstract class.
  std::string type_name;
};

// A constructor or setter-style method that receives only abstract
// dependencies and stores each one verbatim in a field of the same type.
struct InjectionSite {
  std::string class_name;
  std::string callable_id;
  bool is_constructor = false;
  std::vector<InjectedParameter> parameters;
  // Parameter name -> field name.
  std::map<std::string, std::string> assignment_map;
};

// Sites in concrete, top-level, non-test classes where
//  (a) every parameter type is a project-local interface or abstract class,
//  (b) each parameter is assigned verbatim to exactly one field of the same
//      type, onto distinct fields, and
//  (c) every parameter type has at least one concrete implementor.
// Setter-style methods qualify only when their body is nothing but such
// assignments.
std::vector<InjectionSite> FindInjectionSites(
    const corpus::SourceProject& project,
    const corpus::TypeHierarchy& hierarchy);

// Declares no constructor, or a non-private constructor with no parameters.
bool IsZeroArgConstructible(const corpus::ClassModel& c);

void to_json(nlohmann::json& j, const InjectionSite& site);
void from_json(const nlohmann::json& j, InjectionSite& site);

}  // namespace designprobe::analysis

#endif  // DESIGNPROBE_ANALYSIS_INJECTION_SITES_H_
