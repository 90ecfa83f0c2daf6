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

#include "designprobe/evaluation/scoring.h"

#include <cmath>
#include <sstream>
#include <tuple>

#include "designprobe/common/error.h"
#include "designprobe/common/text.h"

namespace designprobe::evaluation {

namespace {

using llmclient::ParsedAnswer;
using promptgen::Concept;
using promptgen::PromptInstance;
using promptgen::TaskKind;

std::set<std::size_t> YesIndices(const std::vector<bool>& labels) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i]) out.insert(i);
  }
  return out;
}

std::set<std::size_t> TruthYes(const PromptInstance& p) {
  std::vector<bool> labels;
  for (const auto& a : p.truth.assertions) labels.push_back(a.expected);
  return YesIndices(labels);
}

std::set<transforms::ClassPair> Canonical(
    const std::set<transforms::ClassPair>& pairs) {
  std::set<transforms::ClassPair> out;
  for (const auto& [a, b] : pairs) out.insert(transforms::MakePair(a, b));
  return out;
}

// Restricts a predicted partition to the truth universe; names the model
// left out become singletons.
std::vector<std::set<std::string>> ProjectOnto(
    const std::vector<std::set<std::string>>& predicted,
    const std::vector<std::set<std::string>>& truth) {
  std::set<std::string> universe;
  for (const auto& block : truth) universe.insert(block.begin(), block.end());
  std::vector<std::set<std::string>> out;
  std::set<std::string> seen;
  for (const auto& block : predicted) {
    std::set<std::string> kept;
    for (const std::string& e : block) {
      if (universe.count(e) > 0) {
        kept.insert(e);
        seen.insert(e);
      }
    }
    if (!kept.empty()) out.push_back(std::move(kept));
  }
  for (const std::string& e : universe) {
    if (seen.count(e) == 0) out.push_back({e});
  }
  return out;
}

ScoreRecord Malformed(const PromptInstance& p) {
  ScoreRecord r;
  if (p.design_concept == Concept::kCohesion &&
      p.task == TaskKind::kOpenEndedGeneration) {
    r.metric = "ari";
  } else {
    r.metric = "f1";
    switch (p.task) {
      case TaskKind::kVerification:
        r.fn = TruthYes(p).size();
        break;
      case TaskKind::kGuidedGeneration:
        r.fn = p.truth.names.size();
        break;
      case TaskKind::kOpenEndedGeneration:
        r.fn = p.truth.pairs.size();
        break;
    }
  }
  r.value = 0.0;
  r.status = "malformed-answer";
  return r;
}

}  // namespace

ScoreRecord ScorePrompt(const PromptInstance& prompt,
                        const std::optional<ParsedAnswer>& answer,
                        const std::string& model_name) {
  ScoreRecord r;
  if (!answer) {
    r = Malformed(prompt);
  } else {
    const ParsedAnswer& a = *answer;
    if (a.variant != llmclient::VariantFor(prompt.design_concept, prompt.task)) {
      throw Error(ErrorCode::kVariantMismatch,
                  "answer shape does not fit prompt " + prompt.id);
    }
    switch (a.variant) {
      case ParsedAnswer::Variant::kLabels:
        if (a.labels.size() != prompt.truth.assertions.size()) {
          throw Error(ErrorCode::kVariantMismatch,
                      "label count differs for prompt " + prompt.id);
        }
        r = F1Sets(YesIndices(a.labels), TruthYes(prompt), true);
        break;
      case ParsedAnswer::Variant::kNames:
        r = F1Sets(a.names, prompt.truth.names);
        break;
      case ParsedAnswer::Variant::kPairs:
        r = F1Sets(Canonical(a.pairs), Canonical(prompt.truth.pairs));
        break;
      case ParsedAnswer::Variant::kPartition:
        r = Ari(ProjectOnto(a.blocks, prompt.truth.blocks),
                prompt.truth.blocks);
        break;
    }
  }
  r.prompt_id = prompt.id;
  r.model_name = model_name;
  return r;
}

std::vector<StratumReport> Aggregate(
    const std::vector<ScoreRecord>& scores,
    const std::map<std::string, const PromptInstance*>& prompts) {
  using Key = std::tuple<std::string, std::string, std::string, std::string,
                         std::string, std::string>;
  std::map<Key, std::vector<double>> groups;
  for (const ScoreRecord& s : scores) {
    auto it = prompts.find(s.prompt_id);
    if (it == prompts.end()) {
      throw Error(ErrorCode::kDanglingScore,
                  "score for unknown prompt " + s.prompt_id);
    }
    const PromptInstance& p = *it->second;
    groups[{std::string(promptgen::ConceptName(p.design_concept)),
            std::string(promptgen::TaskKindName(p.task)), p.transform_kind,
            p.DistortionKey(), s.model_name, s.metric}]
        .push_back(s.value);
  }
  std::vector<StratumReport> out;
  for (const auto& [key, values] : groups) {
    StratumReport row;
    std::tie(row.design_concept, row.task, row.transform_kind, row.distortion,
             row.model_name, row.metric) = key;
    row.n = values.size();
    double sum = 0;
    for (double v : values) sum += v;
    row.mean = sum / row.n;
    double sq = 0;
    for (double v : values) sq += (v - row.mean) * (v - row.mean);
    row.std = std::sqrt(sq / row.n);
    out.push_back(std::move(row));
  }
  return out;
}

std::string ReportCsv(const std::vector<StratumReport>& rows) {
  std::ostringstream out;
  out << "concept,task,transform_kind,distortion,model,metric,mean,std,n\n";
  for (const StratumReport& r : rows) {
    out << r.design_concept << ',' << r.task << ',' << r.transform_kind << ','
        << r.distortion << ',' << r.model_name << ',' << r.metric << ','
        << FormatNumber(r.mean) << ',' << FormatNumber(r.std) << ',' << r.n
        << '\n';
  }
  return out.str();
}

}  // namespace designprobe::evaluation
