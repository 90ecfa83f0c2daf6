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

// Serial reference versus OpenMP kernels. Run with
//   ./build/bench/kernels_bench --benchmark_counters_tabular=true

#include <filesystem>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "designprobe/common/rng.h"
#include "designprobe/common/text.h"
#include "designprobe/llmclient/answers.h"
#include "designprobe/parallel/kernels.h"

namespace designprobe::parallel {
namespace {

const std::vector<SourceFile>& Sources() {
  static const std::vector<SourceFile> files = [] {
    std::vector<SourceFile> out;
    const std::filesystem::path root =
        std::filesystem::path(DESIGNPROBE_FIXTURE_DIR) / "corpus";
    for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
      if (e.path().extension() == ".java") {
        out.push_back({e.path().string(), ReadFile(e.path())});
      }
    }
    // Replicate so each run has enough work to split.
    std::vector<SourceFile> many;
    for (int i = 0; i < 20; ++i) many.insert(many.end(), out.begin(), out.end());
    return many;
  }();
  return files;
}

const std::vector<std::string>& Texts() {
  static const std::vector<std::string> texts = [] {
    std::vector<std::string> out;
    for (const auto& f : Sources()) out.push_back(f.text);
    return out;
  }();
  return texts;
}

const std::vector<promptgen::PromptInstance>& Prompts() {
  static const std::vector<promptgen::PromptInstance> prompts = [] {
    std::vector<promptgen::PromptInstance> out;
    Rng rng(1);
    for (int i = 0; i < 4000; ++i) {
      promptgen::PromptInstance p;
      p.id = "p" + std::to_string(i);
      p.design_concept = promptgen::Concept::kCohesion;
      p.task = promptgen::TaskKind::kOpenEndedGeneration;
      std::vector<std::string> names;
      for (int m = 0; m < 40; ++m) names.push_back("m" + std::to_string(m));
      p.truth.blocks.resize(5);
      for (const auto& n : names) p.truth.blocks[rng.Below(5)].insert(n);
      std::erase_if(p.truth.blocks, [](const auto& b) { return b.empty(); });
      p.provenance.entities = names;
      out.push_back(std::move(p));
    }
    return out;
  }();
  return prompts;
}

std::vector<ScoreJob> ScoreJobs() {
  std::vector<ScoreJob> jobs;
  for (const auto& p : Prompts()) {
    jobs.push_back({&p, llmclient::ExpectedAnswer(p), "bench"});
  }
  return jobs;
}

std::vector<TraceJob> TraceJobs() {
  std::vector<TraceJob> jobs;
  const auto& texts = Texts();
  for (std::size_t i = 0; i < Prompts().size(); ++i) {
    jobs.push_back({&Prompts()[i], texts[i % texts.size()], "bench"});
  }
  return jobs;
}

void BM_ParseSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(ParseUnitsSerial(Sources()));
}
void BM_ParseParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(ParseUnitsParallel(Sources()));
}
void BM_TokensSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(CountTokensSerial(Texts()));
}
void BM_TokensParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(CountTokensParallel(Texts()));
}
void BM_ScoreSerial(benchmark::State& s) {
  const auto jobs = ScoreJobs();
  for (auto _ : s) benchmark::DoNotOptimize(ScorePromptsSerial(jobs));
}
void BM_ScoreParallel(benchmark::State& s) {
  const auto jobs = ScoreJobs();
  for (auto _ : s) benchmark::DoNotOptimize(ScorePromptsParallel(jobs));
}
void BM_TraceSerial(benchmark::State& s) {
  const auto jobs = TraceJobs();
  for (auto _ : s) benchmark::DoNotOptimize(TraceStatsSerial(jobs));
}
void BM_TraceParallel(benchmark::State& s) {
  const auto jobs = TraceJobs();
  for (auto _ : s) benchmark::DoNotOptimize(TraceStatsParallel(jobs));
}

BENCHMARK(BM_ParseSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParseParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TokensSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TokensParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ScoreSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TraceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace designprobe::parallel

BENCHMARK_MAIN();
