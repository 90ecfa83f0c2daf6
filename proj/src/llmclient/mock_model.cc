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

#include "designprobe/llmclient/mock_model.h"

#include <algorithm>

#include "designprobe/common/error.h"
#include "designprobe/common/rng.h"
#include "designprobe/common/text.h"
#include "designprobe/llmclient/answers.h"
#include "designprobe/sampling/tokens.h"
#include "json.hpp"

namespace designprobe::llmclient {
namespace {

using promptgen::PromptInstance;

ParsedAnswer RandomAnswer(const PromptInstance& p, Rng& rng) {
  ParsedAnswer a;
  a.variant = VariantFor(p.design_concept, p.task);
  std::vector<std::string> entities = p.provenance.entities;
  switch (a.variant) {
    case ParsedAnswer::Variant::kLabels:
      for (std::size_t i = 0; i < p.truth.assertions.size(); ++i) {
        a.labels.push_back(rng.Coin());
      }
      break;
    case ParsedAnswer::Variant::kNames:
      for (const std::string& e : entities) {
        if (e != p.truth.seed && rng.Coin()) a.names.insert(e);
      }
      break;
    case ParsedAnswer::Variant::kPairs:
      for (std::size_t i = 0; i < entities.size(); ++i) {
        for (std::size_t j = i + 1; j < entities.size(); ++j) {
          if (rng.Below(entities.size()) == 0) {
            a.pairs.insert(transforms::MakePair(entities[i], entities[j]));
          }
        }
      }
      break;
    case ParsedAnswer::Variant::kPartition: {
      const std::size_t k =
          std::max<std::size_t>(1, p.truth.blocks.size());
      std::vector<std::set<std::string>> groups(k);
      for (const std::string& e : entities) groups[rng.Below(k)].insert(e);
      for (auto& g : groups) {
        if (!g.empty()) a.blocks.push_back(std::move(g));
      }
      std::sort(a.blocks.begin(), a.blocks.end(),
                [](const auto& x, const auto& y) {
                  return *x.begin() < *y.begin();
                });
      break;
    }
  }
  return a;
}

}  // namespace

std::string_view MockModeName(MockMode m) {
  switch (m) {
    case MockMode::kOracle:
      return "oracle";
    case MockMode::kRandom:
      return "random";
    case MockMode::kSilent:
      return "silent";
  }
  return "unknown";
}

MockMode ParseMockMode(std::string_view name) {
  for (MockMode m : {MockMode::kOracle, MockMode::kRandom, MockMode::kSilent}) {
    if (MockModeName(m) == name) return m;
  }
  throw Error(ErrorCode::kConfigInvalid,
              "unknown mock mode " + std::string(name));
}

std::string MockBackend::Content(const PromptInstance& prompt) const {
  std::string trace = "Looking at " + Join(prompt.provenance.entities, ", ") +
                      " one at a time.";
  if (mode_ == MockMode::kSilent) {
    return "<think>\n" + trace + "\n</think>\nI cannot tell.";
  }
  ParsedAnswer answer;
  if (mode_ == MockMode::kOracle) {
    answer = ExpectedAnswer(prompt);
  } else {
    Rng rng(DeriveSeed(seed_, prompt.id));
    answer = RandomAnswer(prompt, rng);
  }
  return "<think>\n" + trace + "\n</think>\n<answer>\n" +
         SerializeAnswer(answer) + "\n</answer>";
}

HttpReply MockBackend::Send(const PromptInstance& prompt,
                            const std::string&) {
  const std::string content = Content(prompt);
  nlohmann::json body = {
      {"object", "chat.completion"},
      {"choices",
       {{{"index", 0},
         {"message", {{"role", "assistant"}, {"content", content}}},
         {"finish_reason", "stop"}}}},
      {"usage",
       {{"prompt_tokens", sampling::CountTokens(prompt.prompt)},
        {"completion_tokens", sampling::CountTokens(content)}}}};
  HttpReply reply;
  reply.status = 200;
  reply.body = body.dump();
  return reply;
}

}  // namespace designprobe::llmclient
