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

#include "designprobe/promptgen/prompt_instance.h"

#include "designprobe/common/error.h"
#include "designprobe/common/text.h"

namespace designprobe::promptgen {

std::string_view ConceptName(Concept c) {
  return c == Concept::kCoupling ? "coupling" : "cohesion";
}

std::string_view TaskKindName(TaskKind t) {
  switch (t) {
    case TaskKind::kVerification:
      return "verification";
    case TaskKind::kGuidedGeneration:
      return "guided";
    case TaskKind::kOpenEndedGeneration:
      return "open-ended";
  }
  return "unknown";
}

Concept ParseConcept(std::string_view name) {
  if (name == "coupling") return Concept::kCoupling;
  if (name == "cohesion") return Concept::kCohesion;
  throw Error(ErrorCode::kConfigInvalid,
              "unknown concept " + std::string(name));
}

TaskKind ParseTaskKind(std::string_view name) {
  for (TaskKind t : kAllTasks) {
    if (TaskKindName(t) == name) return t;
  }
  throw Error(ErrorCode::kConfigInvalid, "unknown task " + std::string(name));
}

std::string PromptInstance::DistortionKey() const {
  return FormatNumber(distortion_requested);
}

nlohmann::json TruthToJson(const PromptInstance& p) {
  const PromptTruth& t = p.truth;
  switch (p.task) {
    case TaskKind::kVerification: {
      nlohmann::json list = nlohmann::json::array();
      for (const Assertion& a : t.assertions) {
        list.push_back({{"pair", {a.a, a.b}},
                        {"label", a.expected ? "yes" : "no"}});
      }
      return {{"assertions", list}};
    }
    case TaskKind::kGuidedGeneration:
      return {{"seed", t.seed}, {"names", t.names}};
    case TaskKind::kOpenEndedGeneration:
      if (p.design_concept == Concept::kCoupling) {
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& [a, b] : t.pairs) pairs.push_back({a, b});
        return {{"pairs", pairs}};
      }
      return {{"blocks", t.blocks}};
  }
  return {};
}

PromptTruth TruthFromJson(const nlohmann::json& j, Concept c, TaskKind task) {
  PromptTruth t;
  switch (task) {
    case TaskKind::kVerification:
      for (const nlohmann::json& a : j.at("assertions")) {
        t.assertions.push_back({a.at("pair").at(0).get<std::string>(),
                                a.at("pair").at(1).get<std::string>(),
                                a.at("label").get<std::string>() == "yes"});
      }
      break;
    case TaskKind::kGuidedGeneration:
      t.seed = j.at("seed").get<std::string>();
      t.names = j.at("names").get<std::set<std::string>>();
      break;
    case TaskKind::kOpenEndedGeneration:
      if (c == Concept::kCoupling) {
        for (const nlohmann::json& p : j.at("pairs")) {
          t.pairs.insert(transforms::MakePair(p.at(0).get<std::string>(),
                                              p.at(1).get<std::string>()));
        }
      } else {
        t.blocks = j.at("blocks").get<std::vector<std::set<std::string>>>();
      }
      break;
  }
  return t;
}

void to_json(nlohmann::json& j, const PromptInstance& p) {
  j = nlohmann::json{
      {"id", p.id},
      {"concept", ConceptName(p.design_concept)},
      {"task", TaskKindName(p.task)},
      {"transform_kind", p.transform_kind},
      {"distortion_requested", p.distortion_requested},
      {"distortion_achieved", p.distortion_achieved},
      {"prompt", p.prompt},
      {"ground_truth", TruthToJson(p)},
      {"token_count", p.token_count},
      {"shuffle_seed", p.shuffle_seed},
      {"provenance",
       {{"project_id", p.provenance.project_id},
        {"record_id", p.provenance.record_id},
        {"distractors", p.provenance.distractors},
        {"entities", p.provenance.entities}}}};
}

void from_json(const nlohmann::json& j, PromptInstance& p) {
  p.id = j.at("id").get<std::string>();
  p.design_concept = ParseConcept(j.at("concept").get<std::string>());
  p.task = ParseTaskKind(j.at("task").get<std::string>());
  p.transform_kind = j.at("transform_kind").get<std::string>();
  p.distortion_requested = j.at("distortion_requested").get<double>();
  p.distortion_achieved = j.at("distortion_achieved").get<double>();
  p.prompt = j.at("prompt").get<std::string>();
  p.truth = TruthFromJson(j.at("ground_truth"), p.design_concept, p.task);
  p.token_count = j.at("token_count").get<std::size_t>();
  p.shuffle_seed = j.at("shuffle_seed").get<std::uint64_t>();
  const nlohmann::json& prov = j.at("provenance");
  p.provenance.project_id = prov.at("project_id").get<std::string>();
  p.provenance.record_id = prov.at("record_id").get<std::string>();
  p.provenance.distractors =
      prov.at("distractors").get<std::vector<std::string>>();
  p.provenance.entities = prov.at("entities").get<std::vector<std::string>>();
}

}  // namespace designprobe::promptgen
