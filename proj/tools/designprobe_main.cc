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

// Command-line driver: one subcommand per pipeline stage, plus `all`.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "designprobe/common/error.h"
#include "designprobe/pipeline/config.h"
#include "designprobe/pipeline/stages.h"

namespace {

using designprobe::Error;
using designprobe::ErrorCode;
namespace pipeline = designprobe::pipeline;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingInputs:
      return 2;
    case ErrorCode::kConfigInvalid:
      return 3;
    default:
      return 1;
  }
}

void Print(const pipeline::StageResult& r) {
  std::cout << pipeline::StageName(r.stage) << ": "
            << (r.ran ? r.summary : "up to date, skipped") << "\n";
  for (const std::string& w : r.warnings) std::cerr << "  warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Builds design-understanding probes from Java corpora and "
               "scores model answers."};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string mock;
  std::optional<std::size_t> per_cell;
  bool emit_graph = false;
  std::vector<std::string> corpus;
  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--seed", seed, "master seed");
  app.add_option("--out", out, "run directory");
  app.add_option("--mock", mock, "mock model: oracle, random or silent");
  app.add_option("--per-cell", per_cell, "prompts drawn per sampling cell");
  app.add_flag("--emit-graph", emit_graph, "write dependency edge lists");
  app.add_option("--corpus", corpus, "project root (repeatable)");

  std::vector<CLI::App*> subcommands;
  for (pipeline::Stage s : pipeline::kAllStages) {
    subcommands.push_back(
        app.add_subcommand(std::string(pipeline::StageName(s)),
                           "run the " + std::string(pipeline::StageName(s)) +
                               " stage"));
  }
  CLI::App* all = app.add_subcommand("all", "run every stage in order");
  for (CLI::App* sub : subcommands) sub->fallthrough();
  all->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    pipeline::PipelineConfig config;
    if (!config_path.empty()) config = pipeline::LoadConfig(config_path);
    if (seed) config.master_seed = *seed;
    if (!out.empty()) config.out = out;
    if (!mock.empty()) config.mock = mock;
    if (per_cell) config.per_cell = *per_cell;
    if (emit_graph) config.emit_graph = true;
    if (!corpus.empty()) config.corpus.assign(corpus.begin(), corpus.end());

    if (all->parsed()) {
      for (pipeline::Stage s : pipeline::kAllStages) {
        Print(pipeline::RunStage(s, config));
      }
      return 0;
    }
    for (std::size_t i = 0; i < subcommands.size(); ++i) {
      if (subcommands[i]->parsed()) {
        Print(pipeline::RunStage(pipeline::kAllStages[i], config));
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
