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

#include "designprobe/llmclient/client.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "designprobe/common/error.h"
#include "designprobe/common/text.h"
#include "json.hpp"

namespace designprobe::llmclient {

std::string BuildRequestBody(const promptgen::PromptInstance& prompt,
                             const ModelSpec& spec) {
  nlohmann::json body = {
      {"model", spec.model_name},
      {"messages", {{{"role", "user"}, {"content", prompt.prompt}}}},
      {"temperature", 0},
      {"max_tokens", spec.max_generation_tokens}};
  return body.dump();
}

std::string ExtractContent(const std::string& body, Usage* usage) {
  nlohmann::json j = nlohmann::json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.contains("choices") || j["choices"].empty()) {
    throw Error(ErrorCode::kMalformedAnswer, "reply is not a completion");
  }
  const nlohmann::json& message = j["choices"][0].value("message",
                                                        nlohmann::json{});
  std::string content;
  if (message.contains("content") && message["content"].is_string()) {
    content = message["content"].get<std::string>();
  }
  for (const char* field : {"reasoning_content", "reasoning"}) {
    if (message.contains(field) && message[field].is_string()) {
      content = "<think>" + message[field].get<std::string>() + "</think>" +
                content;
      break;
    }
  }
  if (usage != nullptr && j.contains("usage") && j["usage"].is_object()) {
    usage->prompt_tokens = j["usage"].value("prompt_tokens", 0);
    usage->completion_tokens = j["usage"].value("completion_tokens", 0);
  }
  return content;
}

bool IsTransient(const HttpReply& reply) {
  return reply.status == 0 || reply.status == 429 || reply.status >= 500;
}

InferenceResult Infer(const promptgen::PromptInstance& prompt,
                      const ModelSpec& spec, ChatBackend& backend,
                      const RetryPolicy& policy) {
  InferenceResult result;
  result.prompt_id = prompt.id;
  result.model_name = spec.model_name;
  const std::string request = BuildRequestBody(prompt, spec);
  const auto start = std::chrono::steady_clock::now();
  HttpReply reply;
  for (int attempt = 1; attempt <= policy.max_attempts; ++attempt) {
    result.attempt_count = attempt;
    reply = backend.Send(prompt, request);
    if (!IsTransient(reply) || attempt == policy.max_attempts) break;
    const auto delay = std::chrono::duration<double, std::milli>(
        policy.base_delay.count() * std::pow(policy.multiplier, attempt - 1));
    std::this_thread::sleep_for(delay);
  }
  result.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (reply.status != 200) {
    result.status = ResultStatus::kTransportFailure;
    result.raw_text = reply.body.empty() ? reply.error : reply.body;
    return result;
  }
  try {
    result.raw_text = ExtractContent(reply.body, &result.usage);
  } catch (const Error&) {
    result.status = ResultStatus::kMalformedAnswer;
    result.raw_text = reply.body;
    return result;
  }
  TraceSplit split = SplitTrace(result.raw_text);
  result.reasoning_trace = std::move(split.reasoning_trace);
  result.answer_text = std::move(split.answer_text);
  result.status = ResultStatus::kMalformedAnswer;
  if (!result.answer_text.empty()) {
    try {
      ParseStructuredAnswer(result.answer_text, prompt.design_concept,
                            prompt.task, prompt.truth.assertions.size());
      result.status = ResultStatus::kOk;
    } catch (const Error&) {
    }
  }
  return result;
}

ResponseLog::ResponseLog(std::filesystem::path path) : path_(std::move(path)) {
  if (std::filesystem::exists(path_)) {
    for (const InferenceResult& r : ReadAll()) {
      done_.emplace(r.prompt_id, r.model_name);
    }
  } else if (path_.has_parent_path()) {
    std::filesystem::create_directories(path_.parent_path());
  }
  out_.open(path_, std::ios::app | std::ios::binary);
  if (!out_) throw Error(ErrorCode::kIo, "cannot open " + path_.string());
}

bool ResponseLog::Contains(const std::string& prompt_id,
                           const std::string& model_name) const {
  std::lock_guard<std::mutex> lock(mu_);
  return done_.count({prompt_id, model_name}) > 0;
}

bool ResponseLog::Append(const InferenceResult& result) {
  std::lock_guard<std::mutex> lock(mu_);
  if (!done_.emplace(result.prompt_id, result.model_name).second) {
    return false;
  }
  out_ << nlohmann::json(result).dump() << '\n';
  out_.flush();
  return true;
}

std::vector<InferenceResult> ResponseLog::ReadAll() const {
  std::vector<InferenceResult> out;
  if (!std::filesystem::exists(path_)) return out;
  for (const std::string& line : Split(ReadFile(path_), '\n')) {
    if (Trim(line).empty()) continue;
    out.push_back(nlohmann::json::parse(line).get<InferenceResult>());
  }
  return out;
}

void RateLimiter::Acquire() {
  if (limit_ == 0) return;
  std::unique_lock<std::mutex> lock(mu_);
  while (true) {
    const auto now = std::chrono::steady_clock::now();
    while (!stamps_.empty() && now - stamps_.front() >= window_) {
      stamps_.pop_front();
    }
    if (stamps_.size() < limit_) {
      stamps_.push_back(now);
      return;
    }
    const auto wake = stamps_.front() + window_;
    lock.unlock();
    std::this_thread::sleep_until(wake);
    lock.lock();
  }
}

BatchStats RunBatch(const std::vector<const promptgen::PromptInstance*>& prompts,
                    const ModelSpec& spec, ChatBackend& backend,
                    ResponseLog& log, const RetryPolicy& policy,
                    RateLimiter* limiter) {
  ValidateModelSpec(spec);
  std::vector<const promptgen::PromptInstance*> todo;
  BatchStats stats;
  for (const promptgen::PromptInstance* p : prompts) {
    if (log.Contains(p->id, spec.model_name)) {
      ++stats.skipped;
    } else {
      todo.push_back(p);
    }
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> in_flight{0};
  std::mutex stats_mu;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      if (limiter != nullptr) limiter->Acquire();
      const std::size_t now = in_flight.fetch_add(1) + 1;
      InferenceResult r = Infer(*todo[i], spec, backend, policy);
      in_flight.fetch_sub(1);
      log.Append(r);
      std::lock_guard<std::mutex> lock(stats_mu);
      stats.peak_in_flight = std::max(stats.peak_in_flight, now);
      ++stats.sent;
      switch (r.status) {
        case ResultStatus::kOk:
          ++stats.ok;
          break;
        case ResultStatus::kMalformedAnswer:
          ++stats.malformed;
          break;
        case ResultStatus::kTransportFailure:
          ++stats.failed;
          break;
      }
    }
  };
  const std::size_t n_workers =
      std::min<std::size_t>(spec.max_in_flight, std::max<std::size_t>(1, todo.size()));
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < n_workers; ++w) workers.emplace_back(worker);
  for (std::thread& t : workers) t.join();
  return stats;
}

}  // namespace designprobe::llmclient
