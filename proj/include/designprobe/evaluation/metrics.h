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

#ifndef DESIGNPROBE_EVALUATION_METRICS_H_
#define DESIGNPROBE_EVALUATION_METRICS_H_

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace designprobe::evaluation {

struct Contingency {
  double index = 0.0;
  double expected_index = 0.0;
  double max_index = 0.0;
};

struct ScoreRecord {
  std::string prompt_id;
  std::string model_name;
  // "f1" or "ari".
  std::string metric;
  double value = 0.0;
  // F1 components.
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  // ARI components.
  Contingency contingency;
  // "ok" or "malformed-answer".
  std::string status = "ok";
};

void to_json(nlohmann::json& j, const ScoreRecord& r);
void from_json(const nlohmann::json& j, ScoreRecord& r);

// F1 of `predicted` against `truth`. An empty truth throws
// Error(kEmptyTruth) unless `allow_empty_truth`; then an empty prediction
// scores 1 and any prediction scores 0.
template <typename T>
ScoreRecord F1Sets(const std::set<T>& predicted, const std::set<T>& truth,
                   bool allow_empty_truth = false);

// Adjusted Rand Index of two partitions of the same universe.
// Throws Error(kUniverseMismatch) or Error(kOverlappingBlocks).
ScoreRecord Ari(const std::vector<std::set<std::string>>& a,
                const std::vector<std::set<std::string>>& b);

// Shared by the template above.
ScoreRecord F1FromCounts(std::size_t tp, std::size_t fp, std::size_t fn,
                         bool truth_empty, bool allow_empty_truth);

template <typename T>
ScoreRecord F1Sets(const std::set<T>& predicted, const std::set<T>& truth,
                   bool allow_empty_truth) {
  std::size_t tp = 0;
  for (const T& p : predicted) tp += truth.count(p);
  return F1FromCounts(tp, predicted.size() - tp, truth.size() - tp,
                      truth.empty(), allow_empty_truth);
}

}  // namespace designprobe::evaluation

#endif  // DESIGNPROBE_EVALUATION_METRICS_H_
