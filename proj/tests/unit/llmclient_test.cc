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

#include <atomic>
#include <chrono>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "designprobe/common/error.h"
#include "designprobe/common/rng.h"
#include "designprobe/common/text.h"
#include "designprobe/llmclient/answers.h"
#include "designprobe/llmclient/backend.h"
#include "designprobe/llmclient/client.h"
#include "designprobe/llmclient/mock_model.h"
#include "fixture_corpus.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace designprobe::llmclient {
namespace {

using promptgen::Concept;
using promptgen::PromptInstance;
using promptgen::TaskKind;

PromptInstance Verification(const std::string& id) {
  PromptInstance p;
  p.id = id;
  p.design_concept = Concept::kCoupling;
  p.task = TaskKind::kVerification;
  p.prompt = "Are these coupled?";
  p.truth.assertions = {{"A", "B", true}, {"A", "C", false}};
  p.provenance.entities = {"A", "B", "C"};
  return p;
}

PromptInstance Partition() {
  PromptInstance p;
  p.id = "cohesion-x";
  p.design_concept = Concept::kCohesion;
  p.task = TaskKind::kOpenEndedGeneration;
  p.truth.blocks = {{"a", "b"}, {"c"}, {"d", "e", "f"}};
  p.provenance.entities = {"a", "b", "c", "d", "e", "f"};
  return p;
}

std::string Completion(const std::string& content) {
  return nlohmann::json{
      {"choices", {{{"message", {{"role", "assistant"}, {"content", content}}}}}},
      {"usage", {{"prompt_tokens", 3}, {"completion_tokens", 4}}}}
      .dump();
}

// Replays a fixed list of status codes, then answers 200.
class ScriptedBackend : public ChatBackend {
 public:
  explicit ScriptedBackend(std::vector<int> statuses)
      : statuses_(std::move(statuses)) {}
  HttpReply Send(const PromptInstance&, const std::string& body) override {
    last_body = body;
    HttpReply r;
    const std::size_t i = calls++;
    r.status = i < statuses_.size() ? statuses_[i] : 200;
    if (r.status == 200) r.body = Completion("<answer>yes\nno</answer>");
    return r;
  }
  std::size_t calls = 0;
  std::string last_body;

 private:
  std::vector<int> statuses_;
};

class SlowBackend : public ChatBackend {
 public:
  HttpReply Send(const PromptInstance&, const std::string&) override {
    const int now = ++in_flight;
    {
      std::lock_guard<std::mutex> lock(mu);
      peak = std::max(peak, now);
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
    --in_flight;
    return HttpReply{200, Completion("<answer>yes\nno</answer>"), false, ""};
  }
  std::atomic<int> in_flight{0};
  std::mutex mu;
  int peak = 0;
};

ModelSpec Spec() {
  ModelSpec s;
  s.model_name = "test-model";
  s.endpoint = "http://localhost:1/v1/chat/completions";
  s.max_generation_tokens = 1234;
  return s;
}

RetryPolicy Fast() {
  RetryPolicy p;
  p.base_delay = std::chrono::milliseconds(0);
  return p;
}

TEST(SplitTraceTest, Examples) {
  auto s = SplitTrace("<think>t</think><answer>a</answer>");
  EXPECT_EQ(s.reasoning_trace, "t");
  EXPECT_EQ(s.answer_text, "a");
  s = SplitTrace("just thinking aloud");
  EXPECT_EQ(s.reasoning_trace, "just thinking aloud");
  EXPECT_EQ(s.answer_text, "");
  s = SplitTrace("x<answer>1</answer> y <answer>2</answer>");
  EXPECT_EQ(s.answer_text, "2");
  s = SplitTrace("pre <answer>a</answer>");
  EXPECT_EQ(s.reasoning_trace, "pre ");
}

TEST(ParseAnswerTest, Labels) {
  const auto a = ParseStructuredAnswer("yes\nno", Concept::kCoupling,
                                       TaskKind::kVerification, 2);
  EXPECT_EQ(a.labels, (std::vector<bool>{true, false}));
  EXPECT_EQ(ParseStructuredAnswer("1. Yes\n2. NO.", Concept::kCoupling,
                                  TaskKind::kVerification)
                .labels,
            (std::vector<bool>{true, false}));
  EXPECT_THROW(ParseStructuredAnswer("yes", Concept::kCoupling,
                                     TaskKind::kVerification, 2),
               Error);
  EXPECT_THROW(ParseStructuredAnswer("maybe", Concept::kCoupling,
                                     TaskKind::kVerification),
               Error);
}

TEST(ParseAnswerTest, PairsAreCanonical) {
  const auto a = ParseStructuredAnswer("ServiceA <-> RepoB", Concept::kCoupling,
                                       TaskKind::kOpenEndedGeneration);
  ASSERT_EQ(a.pairs.size(), 1u);
  EXPECT_EQ(*a.pairs.begin(), transforms::ClassPair("RepoB", "ServiceA"));
  EXPECT_THROW(ParseStructuredAnswer("A -> B", Concept::kCoupling,
                                     TaskKind::kOpenEndedGeneration),
               Error);
  EXPECT_TRUE(ParseStructuredAnswer("none", Concept::kCoupling,
                                    TaskKind::kOpenEndedGeneration)
                  .pairs.empty());
}

TEST(ParseAnswerTest, NamesAndPartitions) {
  const auto n = ParseStructuredAnswer("- `Foo`\n  Bar()  \n", Concept::kCohesion,
                                       TaskKind::kGuidedGeneration);
  EXPECT_EQ(n.names, (std::set<std::string>{"Bar", "Foo"}));
  const auto p = ParseStructuredAnswer("group1: c\ngroup2: a, b",
                                       Concept::kCohesion,
                                       TaskKind::kOpenEndedGeneration);
  ASSERT_EQ(p.blocks.size(), 2u);
  EXPECT_EQ(p.blocks[0], (std::set<std::string>{"a", "b"}));
  try {
    ParseStructuredAnswer("group1: a, b\ngroup2: a", Concept::kCohesion,
                          TaskKind::kOpenEndedGeneration);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedAnswer);
  }
  EXPECT_THROW(ParseStructuredAnswer("", Concept::kCohesion,
                                     TaskKind::kGuidedGeneration),
               Error);
}

TEST(ParseAnswerTest, CanonicalizationIsIdempotent) {
  Rng rng(21);
  const std::vector<std::string> names = {"a", "b", "c", "d", "e", "f", "g"};
  for (int trial = 0; trial < 300; ++trial) {
    // Random partition text with shuffled, padded, bulleted names.
    std::vector<std::string> pool = names;
    rng.Shuffle(pool);
    const std::size_t k = 1 + rng.Below(pool.size());
    std::vector<std::vector<std::string>> groups(k);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      groups[i < k ? i : rng.Below(k)].push_back(pool[i]);
    }
    std::string text;
    for (std::size_t g = 0; g < k; ++g) {
      text += "group" + std::to_string(g) + ":  " + Join(groups[g], " , ") +
              "\n";
    }
    const auto once = ParseStructuredAnswer(text, Concept::kCohesion,
                                            TaskKind::kOpenEndedGeneration);
    const auto twice =
        ParseStructuredAnswer(SerializeAnswer(once), Concept::kCohesion,
                              TaskKind::kOpenEndedGeneration);
    EXPECT_EQ(once, twice);

    std::string pairs;
    for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
      pairs += pool[i] + " <-> " + pool[i + 1] + "\n";
    }
    const auto p1 = ParseStructuredAnswer(pairs, Concept::kCoupling,
                                          TaskKind::kOpenEndedGeneration);
    EXPECT_EQ(p1, ParseStructuredAnswer(SerializeAnswer(p1), Concept::kCoupling,
                                        TaskKind::kOpenEndedGeneration));
  }
}

TEST(MockBackendTest, OracleAnswersMatchTruth) {
  const PromptInstance p = Partition();
  MockBackend oracle(MockMode::kOracle, 1);
  const InferenceResult r = Infer(p, Spec(), oracle, Fast());
  ASSERT_EQ(r.status, ResultStatus::kOk);
  EXPECT_EQ(ParseStructuredAnswer(r.answer_text, p.design_concept, p.task),
            ExpectedAnswer(p));
  EXPECT_NE(r.reasoning_trace.find("a, b, c"), std::string::npos);
}

TEST(MockBackendTest, SilentIsMalformedAndRandomIsStable) {
  const PromptInstance p = Verification("v1");
  MockBackend silent(MockMode::kSilent, 1);
  EXPECT_EQ(Infer(p, Spec(), silent, Fast()).status,
            ResultStatus::kMalformedAnswer);
  MockBackend r1(MockMode::kRandom, 9), r2(MockMode::kRandom, 9);
  EXPECT_EQ(r1.Content(p), r2.Content(p));
  EXPECT_EQ(Infer(p, Spec(), r1, Fast()).status, ResultStatus::kOk);
}

TEST(ClientTest, RequestBodyUsesZeroTemperature) {
  ScriptedBackend b({});
  const InferenceResult r = Infer(Verification("v"), Spec(), b, Fast());
  const auto body = nlohmann::json::parse(b.last_body);
  EXPECT_EQ(body.at("temperature").get<double>(), 0.0);
  EXPECT_EQ(body.at("max_tokens").get<int>(), 1234);
  EXPECT_EQ(body.at("model").get<std::string>(), "test-model");
  EXPECT_EQ(body.at("messages").size(), 1u);
  EXPECT_EQ(body.at("messages")[0].at("role"), "user");
  EXPECT_EQ(r.status, ResultStatus::kOk);
  EXPECT_EQ(r.usage.prompt_tokens, 3u);
  EXPECT_EQ(r.usage.completion_tokens, 4u);
}

TEST(ClientTest, RetriesTransientFailures) {
  ScriptedBackend b({429, 429});
  const InferenceResult r = Infer(Verification("v"), Spec(), b, Fast());
  EXPECT_EQ(r.attempt_count, 3);
  EXPECT_EQ(r.status, ResultStatus::kOk);
}

TEST(ClientTest, GivesUpAfterFiveAttempts) {
  ScriptedBackend b({503, 503, 503, 503, 503, 503, 503});
  const InferenceResult r = Infer(Verification("v"), Spec(), b, Fast());
  EXPECT_EQ(r.attempt_count, 5);
  EXPECT_EQ(b.calls, 5u);
  EXPECT_EQ(r.status, ResultStatus::kTransportFailure);
}

TEST(ClientTest, PermanentErrorsAreNotRetried) {
  ScriptedBackend b({401});
  const InferenceResult r = Infer(Verification("v"), Spec(), b, Fast());
  EXPECT_EQ(r.attempt_count, 1);
  EXPECT_EQ(r.status, ResultStatus::kTransportFailure);
}

TEST(ClientTest, BackoffIsExponential) {
  ScriptedBackend b({500, 500, 500});
  RetryPolicy p;
  p.base_delay = std::chrono::milliseconds(10);
  const InferenceResult r = Infer(Verification("v"), Spec(), b, p);
  EXPECT_EQ(r.attempt_count, 4);
  EXPECT_GE(r.latency_ms, 10 + 20 + 40);
}

TEST(ClientTest, ReasoningFieldBecomesThinkBlock) {
  Usage u;
  const std::string body =
      nlohmann::json{
          {"choices",
           {{{"message",
              {{"content", "<answer>yes</answer>"},
               {"reasoning_content", "hmm"}}}}}}}
          .dump();
  const TraceSplit s = SplitTrace(ExtractContent(body, &u));
  EXPECT_EQ(s.reasoning_trace, "hmm");
  EXPECT_EQ(s.answer_text, "yes");
  EXPECT_THROW(ExtractContent("{\"error\": 1}", &u), Error);
}

TEST(ResponseLogTest, AppendOnlyAndResumable) {
  const auto dir = testing::ScratchDir("responses");
  const auto path = dir / "responses.jsonl";
  std::vector<PromptInstance> prompts;
  for (int i = 0; i < 6; ++i) prompts.push_back(Verification("p" + std::to_string(i)));
  std::vector<const PromptInstance*> first = {&prompts[0], &prompts[1],
                                              &prompts[2]};
  std::vector<const PromptInstance*> all;
  for (const auto& p : prompts) all.push_back(&p);
  {
    ResponseLog log(path);
    ScriptedBackend b({});
    const BatchStats s = RunBatch(first, Spec(), b, log, Fast());
    EXPECT_EQ(s.sent, 3u);
  }
  const std::string before = ReadFile(path);
  {
    ResponseLog log(path);
    EXPECT_TRUE(log.Contains("p1", "test-model"));
    EXPECT_FALSE(log.Contains("p1", "other"));
    ScriptedBackend b({});
    const BatchStats s = RunBatch(all, Spec(), b, log, Fast());
    EXPECT_EQ(s.sent, 3u);
    EXPECT_EQ(s.skipped, 3u);
    EXPECT_EQ(b.calls, 3u);
    InferenceResult dup;
    dup.prompt_id = "p0";
    dup.model_name = "test-model";
    EXPECT_FALSE(log.Append(dup));
  }
  const std::string after = ReadFile(path);
  EXPECT_EQ(after.substr(0, before.size()), before);
  EXPECT_EQ(ResponseLog(path).ReadAll().size(), 6u);
}

TEST(ResponseLogTest, RecordRoundTrip) {
  InferenceResult r;
  r.prompt_id = "x";
  r.model_name = "m";
  r.raw_text = "<think>é\n</think>";
  r.status = ResultStatus::kMalformedAnswer;
  r.latency_ms = 17;
  const nlohmann::json j = r;
  EXPECT_EQ(nlohmann::json(j.get<InferenceResult>()).dump(), j.dump());
}

TEST(ConcurrencyTest, InFlightIsBounded) {
  const auto dir = testing::ScratchDir("inflight");
  std::vector<PromptInstance> prompts;
  for (int i = 0; i < 24; ++i) prompts.push_back(Verification("q" + std::to_string(i)));
  std::vector<const PromptInstance*> ptrs;
  for (const auto& p : prompts) ptrs.push_back(&p);
  ModelSpec spec = Spec();
  spec.max_in_flight = 3;
  SlowBackend b;
  ResponseLog log(dir / "r.jsonl");
  const BatchStats s = RunBatch(ptrs, spec, b, log, Fast());
  EXPECT_EQ(s.ok, 24u);
  EXPECT_LE(b.peak, 3);
  EXPECT_LE(s.peak_in_flight, 3u);
}

TEST(ConcurrencyTest, RateLimiterHoldsSlidingWindow) {
  RateLimiter limiter(4, std::chrono::milliseconds(200));
  std::vector<std::chrono::steady_clock::time_point> stamps;
  for (int i = 0; i < 10; ++i) {
    limiter.Acquire();
    stamps.push_back(std::chrono::steady_clock::now());
  }
  for (std::size_t i = 4; i < stamps.size(); ++i) {
    EXPECT_GE(stamps[i] - stamps[i - 4], std::chrono::milliseconds(199));
  }
}

TEST(ModelSpecTest, Validation) {
  ModelSpec s = Spec();
  EXPECT_NO_THROW(ValidateModelSpec(s));
  s.max_in_flight = 0;
  EXPECT_THROW(ValidateModelSpec(s), Error);
}

}  // namespace
}  // namespace designprobe::llmclient
