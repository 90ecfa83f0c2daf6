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

#include "designprobe/pipeline/manifest.h"

#include "designprobe/common/hash.h"
#include "designprobe/common/text.h"
#include "json.hpp"

namespace designprobe::pipeline {

namespace {

std::string FileHash(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return "absent";
  return ToHex(Fnv1a64(ReadFile(path)));
}

}  // namespace

std::string HashFiles(const std::filesystem::path& dir,
                      const std::vector<std::string>& paths) {
  std::string acc;
  for (const std::string& p : paths) {
    acc += p;
    acc += '=';
    acc += FileHash(dir / p);
    acc += '\n';
  }
  return ToHex(Fnv1a64(acc));
}

Manifest::Manifest(std::filesystem::path out_dir)
    : out_dir_(std::move(out_dir)) {}

void Manifest::Load() {
  const auto path = out_dir_ / "manifest.json";
  if (!std::filesystem::exists(path)) return;
  const nlohmann::json j = nlohmann::json::parse(ReadFile(path));
  config_hash = j.value("config_hash", std::string());
  master_seed = j.value("master_seed", std::uint64_t{0});
  stages_.clear();
  const nlohmann::json stages = j.value("stages", nlohmann::json::object());
  for (const auto& [name, s] : stages.items()) {
    StageEntry e;
    e.version = s.at("version").get<int>();
    e.input_hash = s.at("input_hash").get<std::string>();
    e.outputs = s.at("outputs").get<std::map<std::string, std::string>>();
    stages_[name] = std::move(e);
  }
}

void Manifest::Save() const {
  nlohmann::json stages = nlohmann::json::object();
  for (const auto& [name, e] : stages_) {
    stages[name] = {{"version", e.version},
                    {"input_hash", e.input_hash},
                    {"outputs", e.outputs}};
  }
  const nlohmann::json j = {{"config_hash", config_hash},
                            {"master_seed", master_seed},
                            {"stages", stages}};
  WriteFile(out_dir_ / "manifest.json", j.dump(2) + "\n");
}

bool Manifest::UpToDate(const std::string& stage, int version,
                        const std::string& input_hash) const {
  auto it = stages_.find(stage);
  if (it == stages_.end()) return false;
  const StageEntry& e = it->second;
  if (e.version != version || e.input_hash != input_hash) return false;
  for (const auto& [path, hash] : e.outputs) {
    if (FileHash(out_dir_ / path) != hash) return false;
  }
  return true;
}

void Manifest::Record(const std::string& stage, int version,
                      const std::string& input_hash,
                      const std::vector<std::string>& outputs) {
  StageEntry e;
  e.version = version;
  e.input_hash = input_hash;
  for (const std::string& p : outputs) e.outputs[p] = FileHash(out_dir_ / p);
  stages_[stage] = std::move(e);
}

}  // namespace designprobe::pipeline
