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

#include "designprobe/pipeline/stages.h"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "designprobe/analysis/cohesion.h"
#include "designprobe/analysis/dependency_graph.h"
#include "designprobe/analysis/distractors.h"
#include "designprobe/analysis/injection_sites.h"
#include "designprobe/common/error.h"
#include "designprobe/common/hash.h"
#include "designprobe/common/rng.h"
#include "designprobe/common/text.h"
#include "designprobe/corpus/hierarchy.h"
#include "designprobe/corpus/java_parser.h"
#include "designprobe/evaluation/scoring.h"
#include "designprobe/llmclient/client.h"
#include "designprobe/llmclient/mock_model.h"
#include "designprobe/parallel/kernels.h"
#include "designprobe/pipeline/manifest.h"
#include "designprobe/promptgen/assemble.h"
#include "designprobe/promptgen/distortion.h"
#include "designprobe/promptgen/templates.h"
#include "designprobe/sampling/stratified.h"
#include "designprobe/traces/trace_stats.h"
#include "designprobe/transforms/coupling_mutations.h"
#include "designprobe/transforms/incohesive.h"
#include "designprobe/transforms/skeleton.h"
#include "json.hpp"

namespace designprobe::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kStageVersion = 1;
constexpr int kCohesionAttempts = 200;

constexpr const char* kProjectsFile = "projects.json";
constexpr const char* kSkippedFile = "skipped_units.txt";
constexpr const char* kSitesFile = "analysis/injection_sites.json";
constexpr const char* kPoolFile = "analysis/cohesive_pool.json";
constexpr const char* kClustersFile = "analysis/clusters.json";
constexpr const char* kMutationIndex = "mutations/index.json";
constexpr const char* kPromptsFile = "prompts.jsonl";
constexpr const char* kPromptWarnings = "prompt_warnings.txt";
constexpr const char* kSampleFile = "sample.jsonl";
constexpr const char* kSamplingReport = "sampling_report.json";
constexpr const char* kResponsesFile = "responses.jsonl";
constexpr const char* kScoresFile = "scores.jsonl";
constexpr const char* kReportFile = "report.csv";
constexpr const char* kTraceStatsFile = "trace_stats.jsonl";
constexpr const char* kTraceReportFile = "trace_report.csv";

void RequireInputs(const fs::path& out, Stage stage,
                   const std::vector<std::string>& paths) {
  for (const std::string& p : paths) {
    if (!fs::exists(out / p)) {
      throw Error(ErrorCode::kMissingInputs,
                  std::string(StageName(stage)) + " needs " + p +
                      "; run the earlier stages first");
    }
  }
}

void WriteJson(const fs::path& path, const json& j) {
  WriteFile(path, j.dump(2) + "\n");
}

json ReadJson(const fs::path& path) { return json::parse(ReadFile(path)); }

template <typename T>
void WriteJsonl(const fs::path& path, const std::vector<T>& items) {
  std::string text;
  for (const T& item : items) {
    text += json(item).dump();
    text += '\n';
  }
  WriteFile(path, text);
}

std::vector<json> ReadJsonl(const fs::path& path) {
  std::vector<json> out;
  for (const std::string& line : Split(ReadFile(path), '\n')) {
    if (!Trim(line).empty()) out.push_back(json::parse(line));
  }
  return out;
}

std::string JoinLines(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

fs::path TemplateDir(const PipelineConfig& config) {
  return config.template_dir.empty() ? promptgen::DefaultTemplateDir()
                                     : config.template_dir;
}

// Parsed corpus plus the per-project analyses later stages need.
struct Workspace {
  std::vector<corpus::SourceProject> projects;
  std::vector<corpus::TypeHierarchy> hierarchies;

  std::size_t IndexOf(const std::string& project_id) const {
    for (std::size_t i = 0; i < projects.size(); ++i) {
      if (projects[i].id() == project_id) return i;
    }
    throw Error(ErrorCode::kMissingInputs,
                "project " + project_id + " is not in the corpus");
  }
};

Workspace LoadWorkspace(const PipelineConfig& config) {
  Workspace ws;
  ws.projects = LoadCorpus(config);
  for (const auto& p : ws.projects) {
    ws.hierarchies.push_back(corpus::ResolveHierarchy(p));
  }
  return ws;
}

// ---------------------------------------------------------------- ingest

std::string CorpusHash(const PipelineConfig& config) {
  std::string acc;
  for (const fs::path& root : config.corpus) {
    if (!fs::exists(root)) {
      throw Error(ErrorCode::kPathNotFound, "corpus path " + root.string());
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
      if (entry.is_regular_file() && entry.path().extension() == ".java") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& f : files) {
      acc += fs::relative(f, root).generic_string() + "=" +
             ToHex(Fnv1a64(ReadFile(f))) + "\n";
    }
  }
  return ToHex(Fnv1a64(acc));
}

StageResult Ingest(const PipelineConfig& config, const fs::path& out) {
  StageResult r;
  const std::vector<corpus::SourceProject> projects = LoadCorpus(config);
  json listing = json::array();
  std::string skipped;
  std::size_t classes = 0;
  for (const auto& p : projects) {
    const std::size_t n = p.Classes().size();
    classes += n;
    listing.push_back({{"id", p.id()},
                       {"root", p.root_path().generic_string()},
                       {"units", p.units().size()},
                       {"classes", n},
                       {"skipped", p.skipped().size()}});
    skipped += corpus::FormatSkippedUnits(p);
    for (const auto& s : p.skipped()) {
      r.warnings.push_back("skipped " + s.path + ": " + s.diagnostic);
    }
  }
  WriteJson(out / kProjectsFile, listing);
  WriteFile(out / kSkippedFile, skipped);
  r.outputs = {kProjectsFile, kSkippedFile};
  r.summary = std::to_string(projects.size()) + " projects, " +
              std::to_string(classes) + " classes";
  return r;
}

// --------------------------------------------------------------- analyze

StageResult Analyze(const PipelineConfig& config, const fs::path& out) {
  StageResult r;
  const Workspace ws = LoadWorkspace(config);
  json sites = json::object();
  json pool = json::object();
  json clusters = json::object();
  std::size_t n_sites = 0;
  std::size_t n_pool = 0;
  fs::create_directories(out / "analysis");
  for (std::size_t i = 0; i < ws.projects.size(); ++i) {
    const auto& p = ws.projects[i];
    const auto found = analysis::FindInjectionSites(p, ws.hierarchies[i]);
    n_sites += found.size();
    sites[p.id()] = found;
    json names = json::array();
    for (const corpus::ClassModel* c : analysis::CohesivePool(p)) {
      names.push_back(c->qualified_name);
      ++n_pool;
    }
    pool[p.id()] = names;
    const analysis::DependencyGraph graph = analysis::BuildDependencyGraph(p);
    json groups = json::array();
    for (const auto& c : graph.Clusters()) groups.push_back(c.members);
    clusters[p.id()] = groups;
    if (config.emit_graph) {
      const std::string name = "analysis/graph_" + p.id() + ".tsv";
      WriteFile(out / name, graph.ToEdgeList());
      r.outputs.push_back(name);
    }
  }
  WriteJson(out / kSitesFile, sites);
  WriteJson(out / kPoolFile, pool);
  WriteJson(out / kClustersFile, clusters);
  r.outputs.insert(r.outputs.begin(), {kSitesFile, kPoolFile, kClustersFile});
  r.summary = std::to_string(n_sites) + " injection sites, " +
              std::to_string(n_pool) + " cohesive classes";
  return r;
}

// ---------------------------------------------------------------- mutate

void WriteRecord(const fs::path& out, const transforms::MutationRecord& rec,
                 std::vector<std::string>& outputs) {
  const std::string dir = "mutations/" + rec.id;
  WriteJson(out / dir / "record.json", rec);
  outputs.push_back(dir + "/record.json");
  for (const auto& [path, text] : rec.edited_units) {
    const std::string file = dir + "/" + path;
    WriteFile(out / file, text);
    outputs.push_back(file);
  }
}

StageResult Mutate(const PipelineConfig& config, const fs::path& out) {
  StageResult r;
  const Workspace ws = LoadWorkspace(config);
  const json sites = ReadJson(out / kSitesFile);
  const json pool = ReadJson(out / kPoolFile);
  fs::remove_all(out / "mutations");
  std::vector<transforms::MutationRecord> records;
  json skipped = json::array();

  for (std::size_t i = 0; i < ws.projects.size(); ++i) {
    const auto& p = ws.projects[i];
    if (!sites.contains(p.id())) continue;
    for (const auto& sj : sites.at(p.id())) {
      const auto site = sj.get<analysis::InjectionSite>();
      for (auto kind : {transforms::MutationKind::kDid,
                        transforms::MutationKind::kUid,
                        transforms::MutationKind::kIdd}) {
        const std::string kind_name(transforms::MutationKindName(kind));
        Rng rng(DeriveSeed(config.master_seed,
                           "mutate|" + p.id() + "|" + site.class_name + "|" +
                               site.callable_id + "|" + kind_name));
        try {
          records.push_back(transforms::ApplyCoupling(kind, p,
                                                      ws.hierarchies[i], site,
                                                      rng));
        } catch (const Error& e) {
          skipped.push_back({{"kind", kind_name},
                             {"class", site.class_name},
                             {"callable", site.callable_id},
                             {"reason", e.what()}});
        }
      }
    }
  }

  std::vector<transforms::CohesionCandidate> candidates;
  for (std::size_t i = 0; i < ws.projects.size(); ++i) {
    const auto& p = ws.projects[i];
    if (!pool.contains(p.id())) continue;
    for (const auto& name : pool.at(p.id())) {
      const corpus::ClassModel* c = p.FindClass(name.get<std::string>());
      if (c == nullptr) {
        throw Error(ErrorCode::kMissingInputs,
                    "pool class " + name.get<std::string>() +
                        " is not in project " + p.id());
      }
      candidates.push_back(transforms::CohesionCandidate{
          p.id(), &p.UnitOf(*c), c,
          ws.hierarchies[i].AncestorsOf(c->qualified_name)});
    }
  }
  std::size_t cohesion_count = 0;
  for (int level : config.cohesion_levels) {
    const std::size_t need = static_cast<std::size_t>(level) + 1;
    if (candidates.size() < need) {
      r.warnings.push_back("cohesion level " + std::to_string(level) +
                           ": pool has " + std::to_string(candidates.size()) +
                           " classes, needs " + std::to_string(need));
      continue;
    }
    std::set<std::string> ids;
    for (std::size_t k = 0; k < config.cohesion_instances_per_level; ++k) {
      Rng pick(DeriveSeed(config.master_seed,
                          "cohesion|" + std::to_string(level) + "|" +
                              std::to_string(k)));
      std::string last_error = "no attempt";
      bool made = false;
      for (int attempt = 0; attempt < kCohesionAttempts && !made; ++attempt) {
        const auto chosen = pick.SampleIndices(candidates.size(), need);
        std::vector<std::size_t> order(chosen.begin(), chosen.end());
        pick.Shuffle(order);
        std::vector<transforms::CohesionCandidate> sources;
        for (std::size_t s = 1; s < order.size(); ++s) {
          sources.push_back(candidates[order[s]]);
        }
        Rng build(pick.NextU64());
        try {
          auto rec = transforms::SynthesizeIncohesive(
              candidates[order[0]], sources,
              {level, config.n_per_source}, build);
          if (!ids.insert(rec.id).second) continue;
          records.push_back(std::move(rec));
          made = true;
        } catch (const Error& e) {
          last_error = e.what();
        }
      }
      if (made) {
        ++cohesion_count;
      } else {
        r.warnings.push_back("cohesion level " + std::to_string(level) +
                             " instance " + std::to_string(k) + ": " +
                             last_error);
      }
    }
  }

  std::sort(records.begin(), records.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  json index = json::array();
  for (const auto& rec : records) {
    WriteRecord(out, rec, r.outputs);
    index.push_back(rec.id);
  }
  WriteJson(out / kMutationIndex, {{"records", index}, {"skipped", skipped}});
  r.outputs.insert(r.outputs.begin(), kMutationIndex);
  r.summary = std::to_string(records.size() - cohesion_count) +
              " coupling mutations, " + std::to_string(cohesion_count) +
              " incohesive classes, " + std::to_string(skipped.size()) +
              " skipped sites";
  return r;
}

// ----------------------------------------------------------- gen-prompts

const corpus::ClassModel& ClassIn(const corpus::CompilationUnit& unit,
                                  const std::string& qualified_name) {
  for (const auto& c : unit.classes) {
    if (c.qualified_name == qualified_name) return c;
  }
  throw Error(ErrorCode::kUnknownNode,
              qualified_name + " is not declared in " + unit.path);
}

std::vector<promptgen::PromptInstance> CouplingPrompts(
    const PipelineConfig& config, const Workspace& ws,
    const std::map<std::string, analysis::DependencyGraph>& graphs,
    const transforms::MutationRecord& rec,
    const std::map<promptgen::TaskKind, promptgen::PromptTemplate>& templates,
    std::vector<std::string>& warnings) {
  const corpus::SourceProject& project = ws.projects[ws.IndexOf(rec.project_id)];
  std::map<std::string, corpus::CompilationUnit> edited;
  for (const auto& [path, text] : rec.edited_units) {
    edited.emplace(path, corpus::ParseCompilationUnit(path, text));
  }
  std::vector<promptgen::ClassText> core;
  std::set<std::string> reserved;
  for (const std::string& name : rec.touched_classes) {
    const corpus::ClassModel* original = project.FindClass(name);
    if (original == nullptr) {
      throw Error(ErrorCode::kUnknownNode, name + " is not in the project");
    }
    auto it = edited.find(original->unit_path);
    const corpus::CompilationUnit& unit =
        it != edited.end() ? it->second : project.UnitOf(*original);
    const corpus::ClassModel& c = ClassIn(unit, name);
    auto keep = rec.preserve.find(name);
    core.push_back({name, c.simple_name,
                    transforms::Skeletonize(
                        unit, c,
                        keep == rec.preserve.end() ? std::set<std::string>{}
                                                   : keep->second)});
    reserved.insert(c.simple_name);
  }
  const std::set<std::string> mutated(rec.touched_classes.begin(),
                                      rec.touched_classes.end());
  const analysis::ClassFilter eligible = [&](const std::string& name) {
    const corpus::ClassModel* c = project.FindClass(name);
    return c != nullptr && c->IsTopLevel() && !c->is_test;
  };
  const promptgen::VerificationConfig vcfg{config.verification_positives,
                                           config.verification_negatives};

  std::vector<promptgen::PromptInstance> out;
  for (double ratio : config.coupling_ratios) {
    const std::string ratio_key = FormatNumber(ratio);
    const promptgen::DistractorCount count =
        promptgen::DistractorCountFor(ratio, core.size());
    Rng pick(DeriveSeed(config.master_seed,
                        "distractors|" + rec.id + "|" + ratio_key));
    std::vector<std::string> chosen;
    try {
      chosen = analysis::SelectDistractors(graphs.at(rec.project_id), mutated,
                                           count.distractors, pick, eligible,
                                           reserved);
    } catch (const InsufficientDisjointClasses& e) {
      warnings.push_back(rec.id + " at ratio " + ratio_key + ": " + e.what());
      continue;
    }
    std::vector<promptgen::ClassText> distractors;
    for (const std::string& name : chosen) {
      const corpus::ClassModel* c = project.FindClass(name);
      distractors.push_back({name, c->simple_name,
                             transforms::RenderDistractor(project.UnitOf(*c),
                                                          *c)});
    }
    for (promptgen::TaskKind task : promptgen::kAllTasks) {
      Rng rng(DeriveSeed(config.master_seed,
                         "prompt|" + rec.id + "|" + ratio_key + "|" +
                             std::string(promptgen::TaskKindName(task))));
      try {
        out.push_back(promptgen::AssembleCouplingPrompt(
            rec, core, distractors, task, ratio, templates.at(task), rng,
            vcfg));
      } catch (const Error& e) {
        warnings.push_back(rec.id + " " +
                           std::string(promptgen::TaskKindName(task)) +
                           " at ratio " + ratio_key + ": " + e.what());
      }
    }
  }
  return out;
}

StageResult GenPrompts(const PipelineConfig& config, const fs::path& out) {
  StageResult r;
  const Workspace ws = LoadWorkspace(config);
  std::map<std::string, analysis::DependencyGraph> graphs;
  for (const auto& p : ws.projects) {
    graphs.emplace(p.id(), analysis::BuildDependencyGraph(p));
  }
  std::map<promptgen::Concept,
           std::map<promptgen::TaskKind, promptgen::PromptTemplate>>
      templates;
  for (auto c : {promptgen::Concept::kCoupling, promptgen::Concept::kCohesion}) {
    for (promptgen::TaskKind t : promptgen::kAllTasks) {
      templates[c][t] = promptgen::LoadTemplate(TemplateDir(config), c, t);
    }
  }
  const promptgen::VerificationConfig vcfg{config.verification_positives,
                                           config.verification_negatives};
  std::vector<promptgen::PromptInstance> prompts;
  for (const auto& rec : ReadMutations(out)) {
    if (rec.kind != transforms::MutationKind::kCohesion) {
      auto batch = CouplingPrompts(config, ws, graphs, rec,
                                   templates[promptgen::Concept::kCoupling],
                                   r.warnings);
      std::move(batch.begin(), batch.end(), std::back_inserter(prompts));
      continue;
    }
    for (promptgen::TaskKind task : promptgen::kAllTasks) {
      Rng rng(DeriveSeed(config.master_seed,
                         "prompt|" + rec.id + "|" +
                             std::string(promptgen::TaskKindName(task))));
      try {
        prompts.push_back(promptgen::AssembleCohesionPrompt(
            rec, task, templates[promptgen::Concept::kCohesion][task], rng,
            vcfg));
      } catch (const Error& e) {
        r.warnings.push_back(rec.id + " " +
                             std::string(promptgen::TaskKindName(task)) +
                             ": " + e.what());
      }
    }
  }
  std::sort(prompts.begin(), prompts.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  WriteJsonl(out / kPromptsFile, prompts);
  WriteFile(out / kPromptWarnings, JoinLines(r.warnings));
  r.outputs = {kPromptsFile, kPromptWarnings};
  r.summary = std::to_string(prompts.size()) + " prompts";
  return r;
}

// ---------------------------------------------------------------- sample

StageResult Sample(const PipelineConfig& config, const fs::path& out) {
  StageResult r;
  const auto pool = ReadPrompts(out / kPromptsFile);
  const sampling::SampleResult sample = sampling::StratifiedSample(
      pool, config.per_cell, DeriveSeed(config.master_seed, "sample"));
  std::string text;
  for (const sampling::SampledPrompt& s : sample.prompts) {
    const json line = {{"prompt_id", s.prompt->id},
                       {"concept", promptgen::ConceptName(s.prompt->design_concept)},
                       {"task", promptgen::TaskKindName(s.prompt->task)},
                       {"distortion", s.prompt->DistortionKey()},
                       {"bin_index", s.bin},
                       {"cell_key", s.cell_key},
                       {"token_count", s.prompt->token_count}};
    text += line.dump() + "\n";
  }
  WriteFile(out / kSampleFile, text);
  WriteJson(out / kSamplingReport, sampling::SamplingReport(sample));
  r.warnings = sample.warnings;
  r.outputs = {kSampleFile, kSamplingReport};
  r.summary = std::to_string(sample.prompts.size()) + " of " +
              std::to_string(pool.size()) + " prompts sampled";
  return r;
}

// ----------------------------------------------------------------- infer

std::vector<std::string> SampledIds(const fs::path& out) {
  std::vector<std::string> ids;
  for (const json& j : ReadJsonl(out / kSampleFile)) {
    ids.push_back(j.at("prompt_id").get<std::string>());
  }
  return ids;
}

StageResult Infer(const PipelineConfig& config, const fs::path& out) {
  StageResult r;
  const auto prompts = ReadPrompts(out / kPromptsFile);
  std::map<std::string, const promptgen::PromptInstance*> by_id;
  for (const auto& p : prompts) by_id[p.id] = &p;
  std::vector<const promptgen::PromptInstance*> batch;
  for (const std::string& id : SampledIds(out)) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kDanglingId, "sampled prompt " + id +
                                              " is not in prompts.jsonl");
    }
    batch.push_back(it->second);
  }
  llmclient::ResponseLog log(out / kResponsesFile);
  std::ostringstream summary;
  if (!config.mock.empty()) {
    const llmclient::MockMode mode = llmclient::ParseMockMode(config.mock);
    llmclient::MockBackend backend(mode,
                                   DeriveSeed(config.master_seed, "mock"));
    llmclient::ModelSpec spec;
    spec.model_name = "mock-" + std::string(llmclient::MockModeName(mode));
    llmclient::RetryPolicy policy;
    policy.base_delay = std::chrono::milliseconds(0);
    const auto stats =
        llmclient::RunBatch(batch, spec, backend, log, policy, nullptr);
    summary << spec.model_name << ": " << stats.sent << " sent, "
            << stats.skipped << " already logged";
  } else {
    if (config.models.empty()) {
      throw Error(ErrorCode::kConfigInvalid,
                  "infer needs a model.<name>.endpoint or a mock mode");
    }
    for (const auto& spec : config.models) {
      llmclient::HttpBackend backend(spec);
      llmclient::RateLimiter limiter(spec.rate_limit_per_minute);
      const auto stats =
          llmclient::RunBatch(batch, spec, backend, log, {}, &limiter);
      summary << spec.model_name << ": " << stats.sent << " sent, "
              << stats.failed << " failed, " << stats.malformed
              << " malformed; ";
    }
  }
  r.outputs = {kResponsesFile};
  r.summary = summary.str();
  return r;
}

// -------------------------------------------------------------- evaluate

std::vector<llmclient::InferenceResult> SortedResponses(const fs::path& out) {
  auto responses = llmclient::ResponseLog(out / kResponsesFile).ReadAll();
  std::sort(responses.begin(), responses.end(), [](const auto& a, const auto& b) {
    return std::tie(a.prompt_id, a.model_name) <
           std::tie(b.prompt_id, b.model_name);
  });
  return responses;
}

StageResult Evaluate(const PipelineConfig& config, const fs::path& out) {
  (void)config;
  StageResult r;
  const auto prompts = ReadPrompts(out / kPromptsFile);
  std::map<std::string, const promptgen::PromptInstance*> by_id;
  for (const auto& p : prompts) by_id[p.id] = &p;
  const auto responses = SortedResponses(out);
  std::vector<parallel::ScoreJob> jobs;
  for (const auto& resp : responses) {
    auto it = by_id.find(resp.prompt_id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kDanglingScore,
                  "response for unknown prompt " + resp.prompt_id);
    }
    parallel::ScoreJob job{it->second, std::nullopt, resp.model_name};
    if (resp.status == llmclient::ResultStatus::kOk) {
      try {
        job.answer = llmclient::ParseStructuredAnswer(
            resp.answer_text, it->second->design_concept, it->second->task,
            it->second->truth.assertions.size());
      } catch (const Error&) {
      }
    }
    jobs.push_back(std::move(job));
  }
  auto scores = parallel::ScorePromptsParallel(jobs);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (responses[i].status == llmclient::ResultStatus::kTransportFailure) {
      scores[i].status = "transport-failure";
    }
  }
  WriteJsonl(out / kScoresFile, scores);
  WriteFile(out / kReportFile,
            evaluation::ReportCsv(evaluation::Aggregate(scores, by_id)));
  r.outputs = {kScoresFile, kReportFile};
  r.summary = std::to_string(scores.size()) + " scores";
  return r;
}

// ----------------------------------------------------------- trace-stats

StageResult TraceStatsStage(const PipelineConfig& config, const fs::path& out) {
  (void)config;
  StageResult r;
  const auto prompts = ReadPrompts(out / kPromptsFile);
  std::map<std::string, const promptgen::PromptInstance*> by_id;
  for (const auto& p : prompts) by_id[p.id] = &p;
  std::vector<parallel::TraceJob> jobs;
  for (const auto& resp : SortedResponses(out)) {
    if (resp.status == llmclient::ResultStatus::kTransportFailure) continue;
    auto it = by_id.find(resp.prompt_id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kDanglingId,
                  "trace for unknown prompt " + resp.prompt_id);
    }
    jobs.push_back({it->second, resp.reasoning_trace, resp.model_name});
  }
  const auto stats = parallel::TraceStatsParallel(jobs);
  WriteJsonl(out / kTraceStatsFile, stats);
  WriteFile(out / kTraceReportFile,
            traces::TraceReportCsv(traces::TraceReport(stats, by_id)));
  r.outputs = {kTraceStatsFile, kTraceReportFile};
  r.summary = std::to_string(stats.size()) + " traces";
  return r;
}

struct StageSpec {
  std::function<StageResult(const PipelineConfig&, const fs::path&)> run;
  std::vector<std::string> inputs;
};

StageSpec SpecFor(Stage s) {
  switch (s) {
    case Stage::kIngest:
      return {Ingest, {}};
    case Stage::kAnalyze:
      return {Analyze, {kProjectsFile}};
    case Stage::kMutate:
      return {Mutate, {kProjectsFile, kSitesFile, kPoolFile}};
    case Stage::kGenPrompts:
      return {GenPrompts, {kProjectsFile, kMutationIndex}};
    case Stage::kSample:
      return {Sample, {kPromptsFile}};
    case Stage::kInfer:
      return {Infer, {kPromptsFile, kSampleFile}};
    case Stage::kEvaluate:
      return {Evaluate, {kPromptsFile, kSampleFile, kResponsesFile}};
    case Stage::kTraceStats:
      return {TraceStatsStage, {kPromptsFile, kSampleFile, kResponsesFile}};
  }
  throw Error(ErrorCode::kConfigInvalid, "unknown stage");
}

std::string InputHash(Stage s, const PipelineConfig& config,
                      const fs::path& out, const StageSpec& spec) {
  std::vector<std::string> inputs = spec.inputs;
  if (s == Stage::kGenPrompts) {
    const json index = ReadJson(out / kMutationIndex);
    for (const json& id : index.at("records")) {
      inputs.push_back("mutations/" + id.get<std::string>() + "/record.json");
    }
  }
  std::string acc = ConfigHash(config) + "|" + HashFiles(out, inputs);
  if (s == Stage::kIngest || s == Stage::kAnalyze || s == Stage::kMutate ||
      s == Stage::kGenPrompts) {
    acc += "|" + CorpusHash(config);
  }
  if (s == Stage::kGenPrompts) {
    std::vector<std::string> names;
    for (auto c : {promptgen::Concept::kCoupling,
                   promptgen::Concept::kCohesion}) {
      for (promptgen::TaskKind t : promptgen::kAllTasks) {
        names.push_back(promptgen::TemplateFileName(c, t));
      }
    }
    acc += "|" + HashFiles(TemplateDir(config), names);
  }
  return ToHex(Fnv1a64(acc));
}

}  // namespace

std::string_view StageName(Stage s) {
  switch (s) {
    case Stage::kIngest:
      return "ingest";
    case Stage::kAnalyze:
      return "analyze";
    case Stage::kMutate:
      return "mutate";
    case Stage::kGenPrompts:
      return "gen-prompts";
    case Stage::kSample:
      return "sample";
    case Stage::kInfer:
      return "infer";
    case Stage::kEvaluate:
      return "evaluate";
    case Stage::kTraceStats:
      return "trace-stats";
  }
  return "?";
}

Stage ParseStage(std::string_view name) {
  for (Stage s : kAllStages) {
    if (StageName(s) == name) return s;
  }
  throw Error(ErrorCode::kConfigInvalid,
              "unknown stage: " + std::string(name));
}

std::vector<corpus::SourceProject> LoadCorpus(const PipelineConfig& config) {
  std::vector<corpus::SourceProject> projects;
  for (const fs::path& root : config.corpus) {
    projects.push_back(corpus::LoadProject(root));
  }
  return projects;
}

std::vector<promptgen::PromptInstance> ReadPrompts(const fs::path& path) {
  std::vector<promptgen::PromptInstance> out;
  for (const json& j : ReadJsonl(path)) {
    out.push_back(j.get<promptgen::PromptInstance>());
  }
  return out;
}

std::vector<transforms::MutationRecord> ReadMutations(const fs::path& out_dir) {
  std::vector<transforms::MutationRecord> out;
  const json index = ReadJson(out_dir / kMutationIndex);
  for (const json& id : index.at("records")) {
    out.push_back(ReadJson(out_dir / "mutations" / id.get<std::string>() /
                           "record.json")
                      .get<transforms::MutationRecord>());
  }
  return out;
}

StageResult RunStage(Stage stage, const PipelineConfig& config) {
  ValidateConfig(config);
  const fs::path out = config.out;
  const StageSpec spec = SpecFor(stage);
  RequireInputs(out, stage, spec.inputs);
  fs::create_directories(out);
  Manifest manifest(out);
  manifest.Load();
  manifest.config_hash = ConfigHash(config);
  manifest.master_seed = config.master_seed;
  const std::string name(StageName(stage));
  const std::string input_hash = InputHash(stage, config, out, spec);
  if (manifest.UpToDate(name, kStageVersion, input_hash)) {
    StageResult r;
    r.stage = stage;
    r.ran = false;
    for (const auto& [path, hash] : manifest.stages().at(name).outputs) {
      r.outputs.push_back(path);
    }
    r.summary = "up to date";
    return r;
  }
  StageResult r = spec.run(config, out);
  r.stage = stage;
  r.ran = true;
  manifest.Record(name, kStageVersion, input_hash, r.outputs);
  manifest.Save();
  return r;
}

std::vector<StageResult> RunAll(const PipelineConfig& config) {
  std::vector<StageResult> results;
  for (Stage s : kAllStages) results.push_back(RunStage(s, config));
  return results;
}

}  // namespace designprobe::pipeline
