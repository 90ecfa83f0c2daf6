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

#include "designprobe/parallel/kernels.h"

#include <exception>

#include "designprobe/common/error.h"
#include "designprobe/corpus/java_parser.h"
#include "designprobe/sampling/tokens.h"

namespace designprobe::parallel {

namespace {

ParseOutcome ParseOne(const SourceFile& f) {
  ParseOutcome out;
  try {
    out.unit = corpus::ParseCompilationUnit(f.path, f.text);
  } catch (const Error& e) {
    out.diagnostic = e.what();
  }
  return out;
}

evaluation::ScoreRecord ScoreOne(const ScoreJob& job) {
  return evaluation::ScorePrompt(*job.prompt, job.answer, job.model_name);
}

traces::TraceStats TraceOne(const TraceJob& job) {
  return traces::AnalyzeTrace(*job.prompt, job.trace, job.model_name);
}

// Runs fn over every index; the first exception is rethrown after the loop.
template <typename In, typename Out, typename Fn>
std::vector<Out> MapParallel(const std::vector<In>& in, Fn fn) {
  std::vector<Out> out(in.size());
  std::exception_ptr first;
  const long n = static_cast<long>(in.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = fn(in[i]);
    } catch (...) {
#pragma omp critical(designprobe_kernel_error)
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
  return out;
}

template <typename In, typename Out, typename Fn>
std::vector<Out> MapSerial(const std::vector<In>& in, Fn fn) {
  std::vector<Out> out;
  out.reserve(in.size());
  for (const In& x : in) out.push_back(fn(x));
  return out;
}

std::size_t Count(const std::string& s) { return sampling::CountTokens(s); }

}  // namespace

std::vector<ParseOutcome> ParseUnitsSerial(const std::vector<SourceFile>& files) {
  return MapSerial<SourceFile, ParseOutcome>(files, ParseOne);
}

std::vector<ParseOutcome> ParseUnitsParallel(
    const std::vector<SourceFile>& files) {
  return MapParallel<SourceFile, ParseOutcome>(files, ParseOne);
}

std::vector<std::size_t> CountTokensSerial(
    const std::vector<std::string>& texts) {
  return MapSerial<std::string, std::size_t>(texts, Count);
}

std::vector<std::size_t> CountTokensParallel(
    const std::vector<std::string>& texts) {
  return MapParallel<std::string, std::size_t>(texts, Count);
}

std::vector<evaluation::ScoreRecord> ScorePromptsSerial(
    const std::vector<ScoreJob>& jobs) {
  return MapSerial<ScoreJob, evaluation::ScoreRecord>(jobs, ScoreOne);
}

std::vector<evaluation::ScoreRecord> ScorePromptsParallel(
    const std::vector<ScoreJob>& jobs) {
  return MapParallel<ScoreJob, evaluation::ScoreRecord>(jobs, ScoreOne);
}

std::vector<traces::TraceStats> TraceStatsSerial(
    const std::vector<TraceJob>& jobs) {
  return MapSerial<TraceJob, traces::TraceStats>(jobs, TraceOne);
}

std::vector<traces::TraceStats> TraceStatsParallel(
    const std::vector<TraceJob>& jobs) {
  return MapParallel<TraceJob, traces::TraceStats>(jobs, TraceOne);
}

}  // namespace designprobe::parallel
