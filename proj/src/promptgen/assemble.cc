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

#include "designprobe/promptgen/assemble.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "designprobe/analysis/cohesion.h"
#include "designprobe/common/error.h"
#include "designprobe/common/text.h"
#include "designprobe/corpus/render.h"
#include "designprobe/promptgen/distortion.h"
#include "designprobe/sampling/tokens.h"

namespace designprobe::promptgen {
namespace {

using transforms::ClassPair;

void CheckTemplate(const PromptTemplate& tmpl, Concept c, TaskKind t) {
  if (tmpl.design_concept != c || tmpl.task != t) {
    throw Error(ErrorCode::kPreconditionViolation,
                "template " + TemplateFileName(tmpl.design_concept, tmpl.task) +
                    " used for " + TemplateFileName(c, t));
  }
}

// Balanced assertion list in random order, with random orientation.
std::vector<Assertion> BalancedAssertions(std::vector<ClassPair> positives,
                                          std::vector<ClassPair> negatives,
                                          const VerificationConfig& vcfg,
                                          Rng& rng) {
  std::size_t k = std::min(vcfg.positives, positives.size());
  std::size_t m = std::min(vcfg.negatives, negatives.size());
  if (k > m + 1) k = m + 1;
  if (m > k + 1) m = k + 1;
  rng.Shuffle(positives);
  rng.Shuffle(negatives);
  std::vector<Assertion> out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back({positives[i].first, positives[i].second, true});
  }
  for (std::size_t i = 0; i < m; ++i) {
    out.push_back({negatives[i].first, negatives[i].second, false});
  }
  rng.Shuffle(out);
  for (Assertion& a : out) {
    if (rng.Coin()) std::swap(a.a, a.b);
  }
  return out;
}

std::string PairList(const std::vector<Assertion>& assertions) {
  std::string out;
  for (std::size_t i = 0; i < assertions.size(); ++i) {
    if (i > 0) out += "\n";
    out += std::to_string(i + 1) + ". " + assertions[i].a + " - " +
           assertions[i].b;
  }
  return out;
}

std::vector<std::string> TruthNames(const PromptInstance& p) {
  std::vector<std::string> names;
  const PromptTruth& t = p.truth;
  for (const Assertion& a : t.assertions) {
    names.push_back(a.a);
    names.push_back(a.b);
  }
  if (!t.seed.empty()) names.push_back(t.seed);
  names.insert(names.end(), t.names.begin(), t.names.end());
  for (const ClassPair& pr : t.pairs) {
    names.push_back(pr.first);
    names.push_back(pr.second);
  }
  for (const auto& block : t.blocks) {
    names.insert(names.end(), block.begin(), block.end());
  }
  return names;
}

void Finish(PromptInstance& p, const PromptTemplate& tmpl,
            const Bindings& bindings) {
  p.prompt = RenderTemplate(tmpl, bindings);
  for (const std::string& name : TruthNames(p)) {
    if (!ContainsWord(p.prompt, name)) {
      throw Error(ErrorCode::kMissingGroundTruthEntity,
                  name + " does not appear in prompt " + p.id);
    }
  }
  p.token_count = sampling::CountTokens(p.prompt);
}

}  // namespace

std::string CodeBlock(const std::vector<std::string>& texts) {
  std::string out = "```java\n";
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (i > 0) out += "\n\n";
    out += texts[i];
  }
  return out + "\n```";
}

std::string ShuffleMethods(const corpus::CompilationUnit& unit,
                           const corpus::ClassModel& c, Rng& rng) {
  std::vector<std::size_t> order(c.methods.size());
  std::iota(order.begin(), order.end(), 0);
  rng.Shuffle(order);
  std::vector<corpus::Edit> edits;
  for (std::size_t slot = 0; slot < order.size(); ++slot) {
    if (order[slot] == slot) continue;
    edits.push_back(
        corpus::Edit{c.methods[slot].declaration_span,
                     std::string(c.methods[order[slot]].declaration_span.Of(
                         unit.text))});
  }
  return corpus::RenderClass(unit, c, edits);
}

PromptInstance AssembleCouplingPrompt(const transforms::MutationRecord& rec,
                                      const std::vector<ClassText>& core,
                                      const std::vector<ClassText>& distractors,
                                      TaskKind task, double requested_ratio,
                                      const PromptTemplate& tmpl, Rng& rng,
                                      const VerificationConfig& vcfg) {
  CheckTemplate(tmpl, Concept::kCoupling, task);
  PromptInstance p;
  p.design_concept = Concept::kCoupling;
  p.task = task;
  p.transform_kind = std::string(transforms::MutationKindName(rec.kind));
  p.distortion_requested = requested_ratio;
  p.distortion_achieved =
      DistortionRatio(distractors.size(), core.size() + distractors.size());
  p.shuffle_seed = rng.seed();
  p.provenance.project_id = rec.project_id;
  p.provenance.record_id = rec.id;
  for (const ClassText& d : distractors) {
    p.provenance.distractors.push_back(d.qualified_name);
  }
  p.id = rec.id + "-" + std::string(TaskKindName(task)) + "-" +
         p.DistortionKey();

  std::vector<const ClassText*> shown;
  for (const ClassText& c : core) shown.push_back(&c);
  for (const ClassText& d : distractors) shown.push_back(&d);
  rng.Shuffle(shown);
  std::vector<std::string> texts;
  for (const ClassText* c : shown) {
    texts.push_back(c->text);
    p.provenance.entities.push_back(c->simple_name);
  }

  const std::string consumer = SimpleName(rec.consumer);
  std::set<ClassPair> truth_pairs;
  for (const ClassPair& pr : rec.ground_truth.pairs) {
    truth_pairs.insert(
        transforms::MakePair(SimpleName(pr.first), SimpleName(pr.second)));
  }

  Bindings bindings{{"code", CodeBlock(texts)}};
  switch (task) {
    case TaskKind::kVerification: {
      std::vector<ClassPair> negatives;
      for (std::size_t i = 0; i < distractors.size(); ++i) {
        negatives.push_back(
            transforms::MakePair(distractors[i].simple_name, consumer));
        for (std::size_t j = i + 1; j < distractors.size(); ++j) {
          negatives.push_back(transforms::MakePair(
              distractors[i].simple_name, distractors[j].simple_name));
        }
      }
      p.truth.assertions = BalancedAssertions(
          {truth_pairs.begin(), truth_pairs.end()}, negatives, vcfg, rng);
      bindings["pair_list"] = PairList(p.truth.assertions);
      break;
    }
    case TaskKind::kGuidedGeneration: {
      p.truth.seed = consumer;
      for (const ClassPair& pr : truth_pairs) {
        p.truth.names.insert(pr.first == consumer ? pr.second : pr.first);
      }
      std::vector<std::string> names = p.provenance.entities;
      rng.Shuffle(names);
      bindings["seed"] = consumer;
      bindings["candidates"] = Join(names, ", ");
      break;
    }
    case TaskKind::kOpenEndedGeneration:
      p.truth.pairs = truth_pairs;
      break;
  }
  Finish(p, tmpl, bindings);
  return p;
}

PromptInstance AssembleCohesionPrompt(const transforms::MutationRecord& rec,
                                      TaskKind task,
                                      const PromptTemplate& tmpl, Rng& rng,
                                      const VerificationConfig& vcfg) {
  CheckTemplate(tmpl, Concept::kCohesion, task);
  if (rec.kind != transforms::MutationKind::kCohesion ||
      rec.edited_units.size() != 1) {
    throw Error(ErrorCode::kPreconditionViolation,
                rec.id + " is not a cohesion record");
  }
  const auto& [path, text] = *rec.edited_units.begin();
  const corpus::CompilationUnit unit = corpus::Reparse(path, text);
  const corpus::ClassModel* cls = nullptr;
  for (const corpus::ClassModel& c : unit.classes) {
    if (c.simple_name == rec.generated_class) cls = &c;
  }
  if (cls == nullptr) {
    throw Error(ErrorCode::kMissingGroundTruthEntity,
                rec.generated_class + " not found in " + rec.id);
  }

  PromptInstance p;
  p.design_concept = Concept::kCohesion;
  p.task = task;
  p.transform_kind = std::string(transforms::MutationKindName(rec.kind));
  p.distortion_requested = rec.distortion_level;
  p.distortion_achieved = rec.distortion_level;
  p.shuffle_seed = rng.seed();
  p.provenance.project_id = rec.project_id;
  p.provenance.record_id = rec.id;
  p.id = rec.id + "-" + std::string(TaskKindName(task)) + "-" +
         p.DistortionKey();

  const std::string class_text = ShuffleMethods(unit, *cls, rng);
  const corpus::CompilationUnit shown = corpus::Reparse(path, class_text);
  std::set<std::string> seen;
  for (const corpus::MethodModel& m : shown.classes.front().methods) {
    if (m.body_span && seen.insert(m.name).second) {
      p.provenance.entities.push_back(m.name);
    }
  }

  std::vector<std::set<std::string>> blocks;
  for (const transforms::PartitionBlock& b : rec.ground_truth.blocks) {
    blocks.push_back(b.methods);
  }

  Bindings bindings{{"code", CodeBlock({class_text})}};
  switch (task) {
    case TaskKind::kVerification: {
      std::vector<ClassPair> positives;
      std::vector<ClassPair> negatives;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (auto a = blocks[i].begin(); a != blocks[i].end(); ++a) {
          for (auto b = std::next(a); b != blocks[i].end(); ++b) {
            positives.push_back(transforms::MakePair(*a, *b));
          }
          for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            for (const std::string& b : blocks[j]) {
              negatives.push_back(transforms::MakePair(*a, b));
            }
          }
        }
      }
      if (positives.empty() || negatives.empty()) {
        throw Error(ErrorCode::kClassTooSmall,
                    rec.generated_class + " cannot form both pair kinds");
      }
      p.truth.assertions =
          BalancedAssertions(std::move(positives), std::move(negatives),
                             vcfg, rng);
      bindings["pair_list"] = PairList(p.truth.assertions);
      break;
    }
    case TaskKind::kGuidedGeneration: {
      std::vector<std::string> seeds;
      for (const auto& block : blocks) {
        if (block.size() >= 2) seeds.insert(seeds.end(), block.begin(),
                                            block.end());
      }
      if (seeds.empty()) {
        throw Error(ErrorCode::kClassTooSmall,
                    rec.generated_class + " has no method with a peer");
      }
      p.truth.seed = seeds[rng.Below(seeds.size())];
      for (const auto& block : blocks) {
        if (block.count(p.truth.seed) == 0) continue;
        p.truth.names = block;
        p.truth.names.erase(p.truth.seed);
      }
      bindings["seed"] = p.truth.seed;
      break;
    }
    case TaskKind::kOpenEndedGeneration:
      p.truth.blocks = blocks;
      break;
  }
  Finish(p, tmpl, bindings);
  return p;
}

}  // namespace designprobe::promptgen
