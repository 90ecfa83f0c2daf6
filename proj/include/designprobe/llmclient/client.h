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

#ifndef DESIGNPROBE_LLMCLIENT_CLIENT_H_
#define DESIGNPROBE_LLMCLIENT_CLIENT_H_

#include <chrono>
#include <cstddef>
#include <deque>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "designprobe/llmclient/answers.h"
#include "designprobe/llmclient/backend.h"

namespace designprobe::llmclient {

struct RetryPolicy {
  int max_attempts = 5;
  std::chrono::milliseconds base_delay{1000};
  double multiplier = 2.0;
};

// {model, messages, temperature: 0, max_tokens}.
std::string BuildRequestBody(const promptgen::PromptInstance& prompt,
                             const ModelSpec& spec);

// Assistant text of a chat-completions reply. A separate reasoning field is
// folded in as a leading <think> block. Throws Error(kMalformedAnswer) when
// the body is not a completion.
std::string ExtractContent(const std::string& body, Usage* usage);

// True for 429, 5xx and transport errors.
bool IsTransient(const HttpReply& reply);

// Sends one prompt, retrying transient failures with exponential backoff.
// Never throws for transport problems; the status says what happened.
InferenceResult Infer(const promptgen::PromptInstance& prompt,
                      const ModelSpec& spec, ChatBackend& backend,
                      const RetryPolicy& policy = {});

// Append-only responses.jsonl. Existing (prompt_id, model) pairs are loaded
// on open and never written again.
class ResponseLog {
 public:
  explicit ResponseLog(std::filesystem::path path);

  bool Contains(const std::string& prompt_id,
                const std::string& model_name) const;
  // Returns false and writes nothing when the pair is already logged.
  bool Append(const InferenceResult& result);
  std::vector<InferenceResult> ReadAll() const;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::set<std::pair<std::string, std::string>> done_;
  std::ofstream out_;
};

// At most `limit` acquisitions in any sliding `window`. A zero limit never
// blocks.
class RateLimiter {
 public:
  RateLimiter(std::size_t limit,
              std::chrono::steady_clock::duration window =
                  std::chrono::seconds(60))
      : limit_(limit), window_(window) {}

  void Acquire();

 private:
  std::size_t limit_;
  std::chrono::steady_clock::duration window_;
  std::mutex mu_;
  std::deque<std::chrono::steady_clock::time_point> stamps_;
};

struct BatchStats {
  std::size_t sent = 0;
  std::size_t skipped = 0;
  std::size_t ok = 0;
  std::size_t malformed = 0;
  std::size_t failed = 0;
  std::size_t peak_in_flight = 0;
};

// Runs every prompt not yet logged for spec.model_name, with at most
// spec.max_in_flight requests outstanding. Each result is appended to the
// log as soon as it completes.
BatchStats RunBatch(const std::vector<const promptgen::PromptInstance*>& prompts,
                    const ModelSpec& spec, ChatBackend& backend,
                    ResponseLog& log, const RetryPolicy& policy = {},
                    RateLimiter* limiter = nullptr);

}  // namespace designprobe::llmclient

#endif  // DESIGNPROBE_LLMCLIENT_CLIENT_H_
