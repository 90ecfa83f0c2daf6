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

#ifndef DESIGNPROBE_CORPUS_PROJECT_H_
#define DESIGNPROBE_CORPUS_PROJECT_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "designprobe/corpus/model.h"

namespace designprobe::corpus {

struct SkippedUnit {
  std::string path;
  std::string diagnostic;
};

// A loaded Java project. Immutable once built; safe to share across threads.
class SourceProject {
 public:
  SourceProject() = default;
  SourceProject(std::filesystem::path root, std::string id,
                std::vector<CompilationUnit> units,
                std::vector<SkippedUnit> skipped);

  const std::filesystem::path& root_path() const { return root_path_; }
  // Directory name plus a content hash, e.g. "shop-3f2a9c1d".
  const std::string& id() const { return id_; }
  // Sorted by path.
  const std::vector<CompilationUnit>& units() const { return units_; }
  const std::vector<SkippedUnit>& skipped() const { return skipped_; }

  const ClassModel* FindClass(std::string_view qualified_name) const;
  const CompilationUnit* FindUnit(std::string_view path) const;
  // The unit declaring `c`; `c` must belong to this project.
  const CompilationUnit& UnitOf(const ClassModel& c) const;
  // Every class in unit order, nested classes after their enclosing class.
  std::vector<const ClassModel*> Classes() const;

 private:
  std::filesystem::path root_path_;
  std::string id_;
  std::vector<CompilationUnit> units_;
  std::vector<SkippedUnit> skipped_;
  std::map<std::string, std::pair<std::size_t, std::size_t>, std::less<>>
      class_index_;
};

// Loads every .java file under `root`. Files that fail to parse are kept in
// the skip list with their diagnostic.
// Throws Error(kPathNotFound) or Error(kZeroParseableUnits).
SourceProject LoadProject(const std::filesystem::path& root);

// Builds a project from in-memory (relative path, text) pairs.
SourceProject BuildProject(
    const std::string& name, const std::filesystem::path& root,
    std::vector<std::pair<std::string, std::string>> sources);

// Writes the skip list as "path<TAB>diagnostic" lines.
std::string FormatSkippedUnits(const SourceProject& project);

}  // namespace designprobe::corpus

#endif  // DESIGNPROBE_CORPUS_PROJECT_H_
