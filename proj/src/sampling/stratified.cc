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

#include "designprobe/sampling/stratified.h"

#include <algorithm>
#include <tuple>

#include "designprobe/common/error.h"
#include "designprobe/common/rng.h"

namespace designprobe::sampling {

using promptgen::Concept;
using promptgen::PromptInstance;

Quartiles ComputeQuartiles(std::vector<std::size_t> counts) {
  if (counts.empty()) throw Error(ErrorCode::kEmptyPopulation, "no counts");
  std::sort(counts.begin(), counts.end());
  auto at = [&](double fraction) {
    const double pos = fraction * static_cast<double>(counts.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, counts.size() - 1);
    const double w = pos - static_cast<double>(lo);
    return static_cast<double>(counts[lo]) +
           w * (static_cast<double>(counts[hi]) -
                static_cast<double>(counts[lo]));
  };
  return Quartiles{at(0.25), at(0.5), at(0.75)};
}

int BinOf(std::size_t count, const Quartiles& q) {
  const double c = static_cast<double>(count);
  if (c < q.q1) return 1;
  if (c <= q.q2) return 2;
  if (c <= q.q3) return 3;
  return 4;
}

std::string CellKey(const PromptInstance& p, int bin) {
  return std::string(promptgen::ConceptName(p.design_concept)) + "|" +
         std::string(promptgen::TaskKindName(p.task)) + "|" +
         p.DistortionKey() + "|" + std::to_string(bin);
}

SampleResult StratifiedSample(const std::vector<PromptInstance>& pool,
                              std::size_t per_cell, std::uint64_t seed) {
  if (pool.empty()) throw Error(ErrorCode::kEmptyPopulation, "empty pool");
  SampleResult result;
  for (Concept which : {Concept::kCoupling, Concept::kCohesion}) {
    std::vector<const PromptInstance*> members;
    std::vector<std::size_t> counts;
    for (const PromptInstance& p : pool) {
      if (p.design_concept != which) continue;
      members.push_back(&p);
      counts.push_back(p.token_count);
    }
    if (members.empty()) continue;
    SamplingGrid grid;
    grid.design_concept = which;
    grid.per_cell = per_cell;
    grid.quartiles = ComputeQuartiles(counts);

    std::map<std::string, std::vector<SampledPrompt>> cells;
    for (const PromptInstance* p : members) {
      const int bin = BinOf(p->token_count, grid.quartiles);
      const std::string key = CellKey(*p, bin);
      cells[key].push_back(SampledPrompt{p, bin, key});
    }
    for (auto& [key, entries] : cells) {
      std::sort(entries.begin(), entries.end(),
                [](const SampledPrompt& a, const SampledPrompt& b) {
                  return a.prompt->id < b.prompt->id;
                });
      const std::size_t take = std::min(per_cell, entries.size());
      Rng rng(DeriveSeed(seed, key));
      for (std::size_t i : rng.SampleIndices(entries.size(), take)) {
        result.prompts.push_back(entries[i]);
      }
      grid.cells[key] = CellFill{entries.size(), take};
      if (take < per_cell) {
        result.warnings.push_back("cell " + key + " has " +
                                  std::to_string(entries.size()) +
                                  " prompts, wanted " +
                                  std::to_string(per_cell));
      }
    }
    result.grids.push_back(std::move(grid));
  }
  std::sort(result.prompts.begin(), result.prompts.end(),
            [](const SampledPrompt& a, const SampledPrompt& b) {
              const PromptInstance& x = *a.prompt;
              const PromptInstance& y = *b.prompt;
              return std::tie(x.design_concept, x.task,
                              x.distortion_requested, a.bin, x.id) <
                     std::tie(y.design_concept, y.task,
                              y.distortion_requested, b.bin, y.id);
            });
  return result;
}

nlohmann::json SamplingReport(const SampleResult& result) {
  nlohmann::json grids = nlohmann::json::object();
  for (const SamplingGrid& g : result.grids) {
    nlohmann::json cells = nlohmann::json::object();
    for (const auto& [key, fill] : g.cells) {
      cells[key] = {{"available", fill.available}, {"drawn", fill.drawn}};
    }
    grids[std::string(promptgen::ConceptName(g.design_concept))] = {
        {"q1", g.quartiles.q1},
        {"q2", g.quartiles.q2},
        {"q3", g.quartiles.q3},
        {"per_cell", g.per_cell},
        {"cells", cells}};
  }
  return {{"grids", grids},
          {"sampled", result.prompts.size()},
          {"warnings", result.warnings}};
}

}  // namespace designprobe::sampling
