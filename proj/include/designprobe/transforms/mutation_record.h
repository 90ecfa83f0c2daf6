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

#ifndef DESIGNPROBE_TRANSFORMS_MUTATION_RECORD_H_
#define DESIGNPROBE_TRANSFORMS_MUTATION_RECORD_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace designprobe::transforms {

enum class MutationKind { kDid, kUid, kIdd, kCohesion };

std::string_view MutationKindName(MutationKind kind);
// Throws Error(kConfigInvalid) for an unknown name.
MutationKind ParseMutationKind(std::string_view name);

// Canonical unordered pair: first <= second.
using ClassPair = std::pair<std::string, std::string>;
ClassPair MakePair(std::string a, std::string b);

struct PartitionBlock {
  // Qualified name of the class the methods came from.
  std::string origin;
  std::set<std::string> methods;
};

struct GroundTruth {
  enum class Variant { kCoupledPairs, kMethodPartition };
  Variant variant = Variant::kCoupledPairs;
  // Qualified class names.
  std::set<ClassPair> pairs;
  std::vector<PartitionBlock> blocks;

  // Throws Error(kPreconditionViolation) when pairs repeat a member or
  // blocks are empty or overlap.
  void Validate() const;
};

struct MutationRecord {
  // "<kind>-<Class>-<hex8>", stable for a given input and seed.
  std::string id;
  MutationKind kind = MutationKind::kDid;
  std::string project_id;
  // Classes that carry the manifestation, consumer first.
  std::vector<std::string> touched_classes;
  // Abstract type -> chosen concrete class (coupling kinds).
  std::map<std::string, std::string> chosen_implementations;
  // Relative path -> full edited unit text. Touched classes whose unit is
  // not listed are unchanged.
  std::map<std::string, std::string> edited_units;
  GroundTruth ground_truth;
  std::uint64_t rng_seed = 0;

  // Coupling: the injection site, by its callable id before and after.
  std::string consumer;
  std::string callable_id;
  std::string mutated_callable_id;
  // IDD: the factory method name that was added.
  std::string factory_method;
  // Qualified class -> callable ids whose bodies must survive
  // skeletonization.
  std::map<std::string, std::set<std::string>> preserve;

  // Cohesion: the synthesized class and its parameters.
  std::string generated_class;
  int distortion_level = 0;
  int n_per_source = 0;
};

void to_json(nlohmann::json& j, const GroundTruth& truth);
void from_json(const nlohmann::json& j, GroundTruth& truth);
void to_json(nlohmann::json& j, const MutationRecord& record);
void from_json(const nlohmann::json& j, MutationRecord& record);

}  // namespace designprobe::transforms

#endif  // DESIGNPROBE_TRANSFORMS_MUTATION_RECORD_H_
