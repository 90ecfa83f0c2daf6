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

#include "designprobe/evaluation/metrics.h"

#include <map>

#include "designprobe/common/error.h"

namespace designprobe::evaluation {

void to_json(nlohmann::json& j, const ScoreRecord& r) {
  j = nlohmann::json{{"prompt_id", r.prompt_id},
                     {"model", r.model_name},
                     {"metric", r.metric},
                     {"value", r.value},
                     {"status", r.status}};
  if (r.metric == "f1") {
    j["components"] = {{"tp", r.tp}, {"fp", r.fp}, {"fn", r.fn}};
  } else {
    j["components"] = {{"index", r.contingency.index},
                       {"expected_index", r.contingency.expected_index},
                       {"max_index", r.contingency.max_index}};
  }
}

void from_json(const nlohmann::json& j, ScoreRecord& r) {
  r.prompt_id = j.at("prompt_id").get<std::string>();
  r.model_name = j.at("model").get<std::string>();
  r.metric = j.at("metric").get<std::string>();
  r.value = j.at("value").get<double>();
  r.status = j.value("status", std::string("ok"));
  const nlohmann::json& c = j.at("components");
  if (r.metric == "f1") {
    r.tp = c.at("tp").get<std::size_t>();
    r.fp = c.at("fp").get<std::size_t>();
    r.fn = c.at("fn").get<std::size_t>();
  } else {
    r.contingency.index = c.at("index").get<double>();
    r.contingency.expected_index = c.at("expected_index").get<double>();
    r.contingency.max_index = c.at("max_index").get<double>();
  }
}

ScoreRecord F1FromCounts(std::size_t tp, std::size_t fp, std::size_t fn,
                         bool truth_empty, bool allow_empty_truth) {
  if (truth_empty && !allow_empty_truth) {
    throw Error(ErrorCode::kEmptyTruth, "F1 against an empty truth set");
  }
  ScoreRecord r;
  r.metric = "f1";
  r.tp = tp;
  r.fp = fp;
  r.fn = fn;
  const std::size_t denom = 2 * tp + fp + fn;
  r.value = denom == 0 ? 1.0 : static_cast<double>(2 * tp) / denom;
  return r;
}

namespace {

double Choose2(double n) { return n * (n - 1) / 2; }

std::map<std::string, std::size_t> BlockOf(
    const std::vector<std::set<std::string>>& p) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (const std::string& e : p[i]) {
      if (!out.emplace(e, i).second) {
        throw Error(ErrorCode::kOverlappingBlocks,
                    "element '" + e + "' is in two blocks");
      }
    }
  }
  return out;
}

}  // namespace

ScoreRecord Ari(const std::vector<std::set<std::string>>& a,
                const std::vector<std::set<std::string>>& b) {
  const auto in_a = BlockOf(a);
  const auto in_b = BlockOf(b);
  if (in_a.size() != in_b.size()) {
    throw Error(ErrorCode::kUniverseMismatch, "partitions differ in size");
  }
  std::map<std::pair<std::size_t, std::size_t>, double> cells;
  for (const auto& [e, i] : in_a) {
    auto it = in_b.find(e);
    if (it == in_b.end()) {
      throw Error(ErrorCode::kUniverseMismatch,
                  "element '" + e + "' is missing from one partition");
    }
    cells[{i, it->second}] += 1;
  }
  double index = 0;
  for (const auto& [key, n] : cells) index += Choose2(n);
  double sum_a = 0;
  for (const auto& block : a) sum_a += Choose2(block.size());
  double sum_b = 0;
  for (const auto& block : b) sum_b += Choose2(block.size());
  const double total = Choose2(in_a.size());

  ScoreRecord r;
  r.metric = "ari";
  r.contingency.index = index;
  r.contingency.expected_index = total == 0 ? 0 : sum_a * sum_b / total;
  r.contingency.max_index = (sum_a + sum_b) / 2;
  const double denom = r.contingency.max_index - r.contingency.expected_index;
  r.value = denom == 0 ? 1.0 : (index - r.contingency.expected_index) / denom;
  return r;
}

}  // namespace designprobe::evaluation
