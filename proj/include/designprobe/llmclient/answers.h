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

#ifndef DESIGNPROBE_LLMCLIENT_ANSWERS_H_
#define DESIGNPROBE_LLMCLIENT_ANSWERS_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "designprobe/promptgen/prompt_instance.h"
#include "designprobe/transforms/mutation_record.h"
#include "json.hpp"

namespace designprobe::llmclient {

enum class ResultStatus { kOk, kMalformedAnswer, kTransportFailure };

std::string_view ResultStatusName(ResultStatus s);
ResultStatus ParseResultStatus(std::string_view name);

struct Usage {
  std::size_t prompt_tokens = 0;
  std::size_t completion_tokens = 0;
};

struct InferenceResult {
  std::string prompt_id;
  std::string model_name;
  std::string raw_text;
  std::string reasoning_trace;
  std::string answer_text;
  Usage usage;
  std::int64_t latency_ms = 0;
  int attempt_count = 0;
  ResultStatus status = ResultStatus::kTransportFailure;
};

void to_json(nlohmann::json& j, const InferenceResult& r);
void from_json(const nlohmann::json& j, InferenceResult& r);

struct TraceSplit {
  std::string reasoning_trace;
  std::string answer_text;
};

// The trace is the <think> block when present, else everything before the
// first <answer>. The answer is the content of the last complete
// <answer>...</answer> block, trimmed, or empty.
TraceSplit SplitTrace(std::string_view raw_text);

struct ParsedAnswer {
  enum class Variant { kLabels, kNames, kPairs, kPartition };
  Variant variant = Variant::kLabels;
  std::vector<bool> labels;
  std::set<std::string> names;
  std::set<transforms::ClassPair> pairs;
  // Disjoint, nonempty, ordered by smallest member.
  std::vector<std::set<std::string>> blocks;

  bool operator==(const ParsedAnswer&) const = default;
};

ParsedAnswer::Variant VariantFor(promptgen::Concept c, promptgen::TaskKind t);

// Parses the content of an answer block. `expected_labels` > 0 requires
// exactly that many verification lines. Throws Error(kMalformedAnswer).
ParsedAnswer ParseStructuredAnswer(std::string_view answer_text,
                                   promptgen::Concept c, promptgen::TaskKind t,
                                   std::size_t expected_labels = 0);

// Answer-block content that parses back to `a`.
std::string SerializeAnswer(const ParsedAnswer& a);

// The answer a perfect model would give for `p`.
ParsedAnswer ExpectedAnswer(const promptgen::PromptInstance& p);

}  // namespace designprobe::llmclient

#endif  // DESIGNPROBE_LLMCLIENT_ANSWERS_H_
