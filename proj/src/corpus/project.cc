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

#include "designprobe/corpus/project.h"

#include <algorithm>
#include <set>

#include "designprobe/common/error.h"
#include "designprobe/common/hash.h"
#include "designprobe/common/text.h"
#include "designprobe/corpus/test_detection.h"
#include "designprobe/parallel/kernels.h"

namespace designprobe::corpus {
namespace {

SourceProject Assemble(const std::string& name,
                       const std::filesystem::path& root,
                       std::vector<parallel::SourceFile> files) {
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.path < b.path; });
  std::uint64_t hash = Fnv1a64("");
  for (const parallel::SourceFile& f : files) {
    hash = Fnv1a64(f.path, hash);
    hash = Fnv1a64(std::string_view("\0", 1), hash);
    hash = Fnv1a64(f.text, hash);
    hash = Fnv1a64(std::string_view("\0", 1), hash);
  }
  std::vector<parallel::ParseOutcome> outcomes =
      parallel::ParseUnitsParallel(files);

  std::vector<CompilationUnit> units;
  std::vector<SkippedUnit> skipped;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    parallel::ParseOutcome& outcome = outcomes[i];
    if (!outcome.unit) {
      skipped.push_back({files[i].path, outcome.diagnostic});
      continue;
    }
    std::string duplicate;
    for (const ClassModel& c : outcome.unit->classes) {
      if (seen.count(c.qualified_name)) duplicate = c.qualified_name;
    }
    if (!duplicate.empty()) {
      skipped.push_back(
          {files[i].path, "duplicate declaration of " + duplicate});
      continue;
    }
    for (ClassModel& c : outcome.unit->classes) {
      seen.insert(c.qualified_name);
      c.is_test = IsTestClass(c);
    }
    units.push_back(std::move(*outcome.unit));
  }
  if (units.empty()) {
    throw Error(ErrorCode::kZeroParseableUnits,
                "no parseable .java units under " + root.string());
  }
  return SourceProject(root, name + "-" + ToHex(hash, 8), std::move(units),
                       std::move(skipped));
}

}  // namespace

SourceProject::SourceProject(std::filesystem::path root, std::string id,
                             std::vector<CompilationUnit> units,
                             std::vector<SkippedUnit> skipped)
    : root_path_(std::move(root)),
      id_(std::move(id)),
      units_(std::move(units)),
      skipped_(std::move(skipped)) {
  for (std::size_t u = 0; u < units_.size(); ++u) {
    for (std::size_t c = 0; c < units_[u].classes.size(); ++c) {
      class_index_.emplace(units_[u].classes[c].qualified_name,
                           std::make_pair(u, c));
    }
  }
}

const ClassModel* SourceProject::FindClass(
    std::string_view qualified_name) const {
  auto it = class_index_.find(qualified_name);
  if (it == class_index_.end()) return nullptr;
  return &units_[it->second.first].classes[it->second.second];
}

const CompilationUnit* SourceProject::FindUnit(std::string_view path) const {
  for (const CompilationUnit& u : units_) {
    if (u.path == path) return &u;
  }
  return nullptr;
}

const CompilationUnit& SourceProject::UnitOf(const ClassModel& c) const {
  const CompilationUnit* unit = FindUnit(c.unit_path);
  if (unit == nullptr) {
    throw Error(ErrorCode::kUnknownNode,
                c.qualified_name + " does not belong to project " + id_);
  }
  return *unit;
}

std::vector<const ClassModel*> SourceProject::Classes() const {
  std::vector<const ClassModel*> out;
  for (const CompilationUnit& u : units_) {
    for (const ClassModel& c : u.classes) out.push_back(&c);
  }
  return out;
}

SourceProject LoadProject(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorCode::kPathNotFound, root.string());
  }
  std::vector<parallel::SourceFile> files;
  for (const fs::directory_entry& entry :
       fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".java") {
      continue;
    }
    files.push_back({fs::relative(entry.path(), root).generic_string(),
                     ReadFile(entry.path())});
  }
  if (files.empty()) {
    throw Error(ErrorCode::kZeroParseableUnits,
                "no .java files under " + root.string());
  }
  fs::path normalized = fs::weakly_canonical(root);
  std::string name = normalized.filename().string();
  if (name.empty()) name = normalized.parent_path().filename().string();
  return Assemble(name, root, std::move(files));
}

SourceProject BuildProject(
    const std::string& name, const std::filesystem::path& root,
    std::vector<std::pair<std::string, std::string>> sources) {
  std::vector<parallel::SourceFile> files;
  for (auto& [path, text] : sources) {
    files.push_back({std::move(path), std::move(text)});
  }
  return Assemble(name, root, std::move(files));
}

std::string FormatSkippedUnits(const SourceProject& project) {
  std::string out;
  for (const SkippedUnit& s : project.skipped()) {
    out += s.path + "\t" + s.diagnostic + "\n";
  }
  return out;
}

}  // namespace designprobe::corpus
