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

#ifndef DESIGNPROBE_LLMCLIENT_BACKEND_H_
#define DESIGNPROBE_LLMCLIENT_BACKEND_H_

#include <chrono>
#include <cstddef>
#include <memory>
#include <string>

#include "designprobe/promptgen/prompt_instance.h"

namespace designprobe::llmclient {

struct ModelSpec {
  std::string model_name;
  // Full URL of a chat-completions endpoint.
  std::string endpoint;
  // Environment variable holding the bearer token.
  std::string api_key_env = "DESIGNPROBE_API_KEY";
  std::size_t max_generation_tokens = 32768;
  std::chrono::seconds request_timeout{600};
  std::size_t max_in_flight = 4;
  // Requests per 60-second window; 0 disables the limit.
  std::size_t rate_limit_per_minute = 0;
};

// Throws Error(kConfigInvalid).
void ValidateModelSpec(const ModelSpec& spec);

struct HttpReply {
  // 0 when no HTTP response arrived.
  int status = 0;
  std::string body;
  bool timed_out = false;
  std::string error;
};

// One chat-completion round trip. Implementations must be safe to call from
// several threads at once.
class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  virtual HttpReply Send(const promptgen::PromptInstance& prompt,
                         const std::string& request_body) = 0;
};

// HTTP(S) transport. The bearer token is read from the environment at
// construction; throws Error(kConfigInvalid) when it is missing.
class HttpBackend : public ChatBackend {
 public:
  explicit HttpBackend(ModelSpec spec);
  HttpReply Send(const promptgen::PromptInstance& prompt,
                 const std::string& request_body) override;

 private:
  ModelSpec spec_;
  std::string api_key_;
  std::string origin_;
  std::string path_;
};

}  // namespace designprobe::llmclient

#endif  // DESIGNPROBE_LLMCLIENT_BACKEND_H_
