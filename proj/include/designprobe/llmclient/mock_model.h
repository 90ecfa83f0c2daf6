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

#ifndef DESIGNPROBE_LLMCLIENT_MOCK_MODEL_H_
#define DESIGNPROBE_LLMCLIENT_MOCK_MODEL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "designprobe/llmclient/backend.h"

namespace designprobe::llmclient {

enum class MockMode { kOracle, kRandom, kSilent };

std::string_view MockModeName(MockMode m);
// Throws Error(kConfigInvalid).
MockMode ParseMockMode(std::string_view name);

// Local stand-in for a chat endpoint. Replies are chat-completions shaped.
//   oracle: a trace naming every entity, then the ground truth.
//   random: a well-formed answer drawn independently of the truth.
//   silent: a trace with no answer block.
// Replies depend only on the prompt and `seed`.
class MockBackend : public ChatBackend {
 public:
  MockBackend(MockMode mode, std::uint64_t seed) : mode_(mode), seed_(seed) {}

  HttpReply Send(const promptgen::PromptInstance& prompt,
                 const std::string& request_body) override;

  // The assistant message content for `prompt`.
  std::string Content(const promptgen::PromptInstance& prompt) const;

 private:
  MockMode mode_;
  std::uint64_t seed_;
};

}  // namespace designprobe::llmclient

#endif  // DESIGNPROBE_LLMCLIENT_MOCK_MODEL_H_
