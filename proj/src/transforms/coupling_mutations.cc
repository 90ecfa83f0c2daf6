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

#include "designprobe/transforms/coupling_mutations.h"

#include <algorithm>
#include <map>
#include <set>

#include "designprobe/common/error.h"
#include "designprobe/common/hash.h"
#include "designprobe/common/text.h"
#include "designprobe/corpus/render.h"
#include "designprobe/transforms/skeleton.h"

namespace designprobe::transforms {
namespace {

using corpus::ClassModel;
using corpus::CompilationUnit;
using corpus::Edit;
using corpus::MethodModel;
using corpus::Span;

std::string RecordId(MutationKind kind, const corpus::SourceProject& project,
                     const analysis::InjectionSite& site,
                     std::uint64_t seed) {
  std::string kind_name(MutationKindName(kind));
  std::transform(kind_name.begin(), kind_name.end(), kind_name.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  const std::string key = project.id() + "|" + site.class_name + "|" +
                          site.callable_id + "|" + kind_name + "|" +
                          std::to_string(seed);
  return kind_name + "-" + SimpleName(site.class_name) + "-" +
         ToHex(Fnv1a64(key), 8);
}

Edit FactoryInsertion(const CompilationUnit& unit, const ClassModel& c,
                      const std::string& factory) {
  const std::string indent = MemberIndent(unit, c);
  return MemberInsertion(unit, c,
                         indent + "public static " + c.simple_name + " " +
                             factory + "() {\n" + indent + indent +
                             "return new " + c.simple_name + "();\n" +
                             indent + "}\n");
}

struct Chosen {
  // Abstract type -> concrete class, both qualified.
  std::map<std::string, std::string> by_type;
  std::set<std::string> classes;
};

Chosen ChooseImplementors(const corpus::SourceProject& project,
                          const corpus::TypeHierarchy& hierarchy,
                          const analysis::InjectionSite& site,
                          const ClassModel& consumer, bool exclude_created,
                          Rng& rng) {
  std::set<std::string> created;
  if (exclude_created) {
    auto note = [&](const std::vector<corpus::TypeUse>& uses) {
      for (const corpus::TypeUse& u : uses) {
        if (u.kind != corpus::TypeUseKind::kInstantiation) continue;
        if (auto q = corpus::ResolveTypeName(project, consumer, u.name)) {
          created.insert(*q);
        }
      }
    };
    note(consumer.type_uses);
    for (const auto* list : {&consumer.methods, &consumer.constructors}) {
      for (const MethodModel& m : *list) note(m.type_uses);
    }
  }
  Chosen chosen;
  for (const analysis::InjectedParameter& p : site.parameters) {
    if (chosen.by_type.count(p.type_name) > 0) continue;
    std::vector<std::string> candidates = ConstructibleImplementors(
        project, hierarchy, p.type_name, consumer.qualified_name);
    std::erase_if(candidates,
                  [&](const std::string& c) { return created.count(c) > 0; });
    if (candidates.empty()) {
      throw Error(ErrorCode::kNoImplementor,
                  "no zero-argument implementor of " + p.type_name +
                      " for " + site.class_name);
    }
    const std::string& pick = candidates[rng.Below(candidates.size())];
    chosen.by_type[p.type_name] = pick;
    chosen.classes.insert(pick);
  }
  return chosen;
}

MutationRecord Apply(MutationKind kind, const corpus::SourceProject& project,
                     const corpus::TypeHierarchy& hierarchy,
                     const analysis::InjectionSite& site, Rng& rng) {
  const ClassModel* consumer = project.FindClass(site.class_name);
  if (consumer == nullptr) {
    throw Error(ErrorCode::kUnreachable, "no class " + site.class_name);
  }
  const MethodModel* callable = consumer->FindCallable(site.callable_id);
  if (callable == nullptr || site.parameters.empty()) {
    throw Error(ErrorCode::kUnreachable,
                "no callable " + site.callable_id + " in " + site.class_name);
  }
  std::vector<const corpus::FieldAssignment*> assignments;
  for (const analysis::InjectedParameter& p : site.parameters) {
    auto field = site.assignment_map.find(p.name);
    const corpus::FieldAssignment* found = nullptr;
    for (const corpus::FieldAssignment& a : callable->field_assignments) {
      if (field != site.assignment_map.end() && a.value == p.name &&
          a.field == field->second) {
        found = &a;
      }
    }
    if (found == nullptr) {
      throw Error(ErrorCode::kUnreachable,
                  "parameter " + p.name + " of " + site.callable_id +
                      " is not assigned as recorded");
    }
    assignments.push_back(found);
  }

  const bool is_did = kind == MutationKind::kDid;
  const bool is_idd = kind == MutationKind::kIdd;
  if (is_did) {
    const auto& peers =
        callable->is_constructor ? consumer->constructors : consumer->methods;
    for (const MethodModel& m : peers) {
      if (&m != callable && m.name == callable->name && m.parameters.empty()) {
        throw Error(ErrorCode::kUnreachable,
                    site.class_name + " already declares " + m.CallableId());
      }
    }
  }

  Chosen chosen =
      ChooseImplementors(project, hierarchy, site, *consumer, is_idd, rng);

  MutationRecord record;
  record.kind = kind;
  record.project_id = project.id();
  record.rng_seed = rng.seed();
  record.id = RecordId(kind, project, site, rng.seed());
  record.consumer = site.class_name;
  record.callable_id = site.callable_id;
  record.mutated_callable_id =
      is_did ? callable->name + "()" : site.callable_id;
  record.chosen_implementations = chosen.by_type;
  record.touched_classes.push_back(site.class_name);
  for (const std::string& c : chosen.classes) {
    record.touched_classes.push_back(c);
  }
  record.ground_truth.variant = GroundTruth::Variant::kCoupledPairs;
  for (const std::string& c : chosen.classes) {
    record.ground_truth.pairs.insert(MakePair(site.class_name, c));
  }
  record.preserve[site.class_name].insert(record.mutated_callable_id);

  std::map<std::string, std::vector<Edit>> edits;
  const std::string& consumer_path = consumer->unit_path;

  std::map<std::string, std::string> factory_of;
  if (is_idd) {
    for (const std::string& c : chosen.classes) {
      const ClassModel* impl = project.FindClass(c);
      std::string factory = "create";
      if (impl->DeclaresMethod(factory)) factory = "create$gen";
      if (impl->DeclaresMethod(factory)) {
        throw Error(ErrorCode::kNameCollision,
                    c + " already declares create and create$gen");
      }
      factory_of[c] = factory;
      record.preserve[c].insert(factory + "()");
      edits[impl->unit_path].push_back(FactoryInsertion(
          project.UnitOf(*impl), *impl, factory));
    }
    record.factory_method = factory_of.begin()->second;
  }

  for (std::size_t i = 0; i < site.parameters.size(); ++i) {
    const std::string& impl = chosen.by_type.at(site.parameters[i].type_name);
    const std::string simple = SimpleName(impl);
    const std::string value = is_idd ? simple + "." + factory_of.at(impl) + "()"
                                     : "new " + simple + "()";
    edits[consumer_path].push_back(Edit{assignments[i]->value_span, value});
  }
  if (is_did) {
    edits[consumer_path].push_back(Edit{callable->parameter_list_span, ""});
    if (callable->is_constructor) {
      const std::size_t arity = callable->parameters.size();
      for (const corpus::CompilationUnit& unit : project.units()) {
        for (const ClassModel& k : unit.classes) {
          auto repair = [&](const std::vector<corpus::TypeUse>& uses) {
            for (const corpus::TypeUse& u : uses) {
              if (u.kind != corpus::TypeUseKind::kInstantiation ||
                  !u.arguments || u.argument_count != arity) {
                continue;
              }
              auto target = corpus::ResolveTypeName(project, k, u.name);
              if (target == site.class_name) {
                edits[unit.path].push_back(Edit{*u.arguments, ""});
              }
            }
          };
          repair(k.type_uses);
          for (const auto* list : {&k.methods, &k.constructors}) {
            for (const MethodModel& m : *list) repair(m.type_uses);
          }
        }
      }
    }
  }

  for (auto& [path, unit_edits] : edits) {
    const CompilationUnit* unit = project.FindUnit(path);
    record.edited_units[path] = corpus::RenderUnit(*unit, unit_edits);
  }
  return record;
}

}  // namespace

std::vector<std::string> ConstructibleImplementors(
    const corpus::SourceProject& project,
    const corpus::TypeHierarchy& hierarchy, const std::string& abstract_type,
    const std::string& consumer) {
  std::vector<std::string> out;
  for (const std::string& name : hierarchy.ImplementorsOf(abstract_type)) {
    const ClassModel* c = project.FindClass(name);
    if (c == nullptr || !c->IsTopLevel() || c->is_test || name == consumer) {
      continue;
    }
    if (analysis::IsZeroArgConstructible(*c)) out.push_back(name);
  }
  return out;
}

MutationRecord ApplyDid(const corpus::SourceProject& project,
                        const corpus::TypeHierarchy& hierarchy,
                        const analysis::InjectionSite& site, Rng& rng) {
  return Apply(MutationKind::kDid, project, hierarchy, site, rng);
}

MutationRecord ApplyUid(const corpus::SourceProject& project,
                        const corpus::TypeHierarchy& hierarchy,
                        const analysis::InjectionSite& site, Rng& rng) {
  return Apply(MutationKind::kUid, project, hierarchy, site, rng);
}

MutationRecord ApplyIdd(const corpus::SourceProject& project,
                        const corpus::TypeHierarchy& hierarchy,
                        const analysis::InjectionSite& site, Rng& rng) {
  return Apply(MutationKind::kIdd, project, hierarchy, site, rng);
}

MutationRecord ApplyCoupling(MutationKind kind,
                             const corpus::SourceProject& project,
                             const corpus::TypeHierarchy& hierarchy,
                             const analysis::InjectionSite& site, Rng& rng) {
  if (kind == MutationKind::kCohesion) {
    throw Error(ErrorCode::kPreconditionViolation,
                "cohesion is not a coupling mutation");
  }
  return Apply(kind, project, hierarchy, site, rng);
}

}  // namespace designprobe::transforms
