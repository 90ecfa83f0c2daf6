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

#ifndef DESIGNPROBE_PIPELINE_MANIFEST_H_
#define DESIGNPROBE_PIPELINE_MANIFEST_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace designprobe::pipeline {

struct StageEntry {
  int version = 0;
  std::string input_hash;
  // Output path relative to the run directory -> content hash.
  std::map<std::string, std::string> outputs;
};

// manifest.json of a run directory.
class Manifest {
 public:
  explicit Manifest(std::filesystem::path out_dir);

  // Reads manifest.json when present.
  void Load();
  void Save() const;

  // True when the stage last ran with the same inputs and its outputs are
  // still on disk unchanged.
  bool UpToDate(const std::string& stage, int version,
                const std::string& input_hash) const;
  void Record(const std::string& stage, int version,
              const std::string& input_hash,
              const std::vector<std::string>& outputs);

  const std::map<std::string, StageEntry>& stages() const { return stages_; }
  std::string config_hash;
  std::uint64_t master_seed = 0;

 private:
  std::filesystem::path out_dir_;
  std::map<std::string, StageEntry> stages_;
};

// Hash of the names and contents of `paths` (relative to `dir`), in order.
// Missing files hash as absent.
std::string HashFiles(const std::filesystem::path& dir,
                      const std::vector<std::string>& paths);

}  // namespace designprobe::pipeline

#endif  // DESIGNPROBE_PIPELINE_MANIFEST_H_
