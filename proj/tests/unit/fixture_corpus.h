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

#ifndef DESIGNPROBE_TESTS_FIXTURE_CORPUS_H_
#define DESIGNPROBE_TESTS_FIXTURE_CORPUS_H_

#include <filesystem>
#include <string>

#include "designprobe/corpus/project.h"

namespace designprobe::testing {

inline std::filesystem::path FixtureDir() { return DESIGNPROBE_FIXTURE_DIR; }

inline const corpus::SourceProject& Shop() {
  static const corpus::SourceProject project =
      corpus::LoadProject(FixtureDir() / "corpus" / "shop");
  return project;
}

inline const corpus::SourceProject& Ledger() {
  static const corpus::SourceProject project =
      corpus::LoadProject(FixtureDir() / "corpus" / "ledger");
  return project;
}

// A fresh directory under the system temp dir.
inline std::filesystem::path ScratchDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("designprobe_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace designprobe::testing

#endif  // DESIGNPROBE_TESTS_FIXTURE_CORPUS_H_
