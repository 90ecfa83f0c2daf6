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

#include "designprobe/transforms/mutation_record.h"

#include "designprobe/common/error.h"

namespace designprobe::transforms {

std::string_view MutationKindName(MutationKind kind) {
  switch (kind) {
    case MutationKind::kDid:
      return "DID";
    case MutationKind::kUid:
      return "UID";
    case MutationKind::kIdd:
      return "IDD";
    case MutationKind::kCohesion:
      return "COHESION";
  }
  return "unknown";
}

MutationKind ParseMutationKind(std::string_view name) {
  for (MutationKind k : {MutationKind::kDid, MutationKind::kUid,
                         MutationKind::kIdd, MutationKind::kCohesion}) {
    if (MutationKindName(k) == name) return k;
  }
  throw Error(ErrorCode::kConfigInvalid,
              "unknown mutation kind " + std::string(name));
}

ClassPair MakePair(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

void GroundTruth::Validate() const {
  if (variant == Variant::kCoupledPairs) {
    for (const ClassPair& p : pairs) {
      if (p.first == p.second) {
        throw Error(ErrorCode::kPreconditionViolation,
                    "pair with a repeated member: " + p.first);
      }
    }
    return;
  }
  std::set<std::string> seen;
  for (const PartitionBlock& b : blocks) {
    if (b.methods.empty()) {
      throw Error(ErrorCode::kPreconditionViolation,
                  "empty block from " + b.origin);
    }
    for (const std::string& m : b.methods) {
      if (!seen.insert(m).second) {
        throw Error(ErrorCode::kPreconditionViolation,
                    "method in two blocks: " + m);
      }
    }
  }
}

void to_json(nlohmann::json& j, const GroundTruth& truth) {
  if (truth.variant == GroundTruth::Variant::kCoupledPairs) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const ClassPair& p : truth.pairs) {
      pairs.push_back({p.first, p.second});
    }
    j = nlohmann::json{{"variant", "coupled-pairs"}, {"pairs", pairs}};
    return;
  }
  nlohmann::json blocks = nlohmann::json::array();
  for (const PartitionBlock& b : truth.blocks) {
    blocks.push_back({{"origin", b.origin}, {"methods", b.methods}});
  }
  j = nlohmann::json{{"variant", "method-partition"}, {"blocks", blocks}};
}

void from_json(const nlohmann::json& j, GroundTruth& truth) {
  const std::string variant = j.at("variant").get<std::string>();
  truth = GroundTruth{};
  if (variant == "coupled-pairs") {
    truth.variant = GroundTruth::Variant::kCoupledPairs;
    for (const nlohmann::json& p : j.at("pairs")) {
      truth.pairs.insert(
          MakePair(p.at(0).get<std::string>(), p.at(1).get<std::string>()));
    }
  } else if (variant == "method-partition") {
    truth.variant = GroundTruth::Variant::kMethodPartition;
    for (const nlohmann::json& b : j.at("blocks")) {
      truth.blocks.push_back(
          {b.at("origin").get<std::string>(),
           b.at("methods").get<std::set<std::string>>()});
    }
  } else {
    throw Error(ErrorCode::kConfigInvalid, "unknown truth variant " + variant);
  }
}

void to_json(nlohmann::json& j, const MutationRecord& r) {
  nlohmann::json preserve = nlohmann::json::object();
  for (const auto& [cls, ids] : r.preserve) preserve[cls] = ids;
  j = nlohmann::json{{"id", r.id},
                     {"kind", MutationKindName(r.kind)},
                     {"project_id", r.project_id},
                     {"touched_classes", r.touched_classes},
                     {"chosen_implementations", r.chosen_implementations},
                     {"edited_units", r.edited_units},
                     {"ground_truth", r.ground_truth},
                     {"rng_seed", r.rng_seed},
                     {"consumer", r.consumer},
                     {"callable_id", r.callable_id},
                     {"mutated_callable_id", r.mutated_callable_id},
                     {"factory_method", r.factory_method},
                     {"preserve", preserve},
                     {"generated_class", r.generated_class},
                     {"distortion_level", r.distortion_level},
                     {"n_per_source", r.n_per_source}};
}

void from_json(const nlohmann::json& j, MutationRecord& r) {
  r.id = j.at("id").get<std::string>();
  r.kind = ParseMutationKind(j.at("kind").get<std::string>());
  r.project_id = j.at("project_id").get<std::string>();
  r.touched_classes = j.at("touched_classes").get<std::vector<std::string>>();
  r.chosen_implementations = j.at("chosen_implementations")
                                 .get<std::map<std::string, std::string>>();
  r.edited_units =
      j.at("edited_units").get<std::map<std::string, std::string>>();
  r.ground_truth = j.at("ground_truth").get<GroundTruth>();
  r.rng_seed = j.at("rng_seed").get<std::uint64_t>();
  r.consumer = j.value("consumer", "");
  r.callable_id = j.value("callable_id", "");
  r.mutated_callable_id = j.value("mutated_callable_id", "");
  r.factory_method = j.value("factory_method", "");
  r.preserve.clear();
  for (const auto& [cls, ids] : j.at("preserve").items()) {
    r.preserve[cls] = ids.get<std::set<std::string>>();
  }
  r.generated_class = j.value("generated_class", "");
  r.distortion_level = j.value("distortion_level", 0);
  r.n_per_source = j.value("n_per_source", 0);
}

}  // namespace designprobe::transforms
