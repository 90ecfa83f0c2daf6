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

#include "designprobe/transforms/incohesive.h"

#include <algorithm>
#include <map>
#include <set>

#include "designprobe/analysis/cohesion.h"
#include "designprobe/common/error.h"
#include "designprobe/common/hash.h"
#include "designprobe/corpus/hierarchy.h"
#include "designprobe/corpus/java_lexer.h"
#include "designprobe/corpus/render.h"
#include "designprobe/transforms/skeleton.h"

namespace designprobe::transforms {
namespace {

using corpus::ClassModel;
using corpus::Edit;
using corpus::Span;

struct Group {
  const CohesionCandidate* candidate;
  std::set<std::string> methods;
  std::set<std::string> fields;
  // Every member name the group brings into the generated class.
  std::set<std::string> defines;
  std::set<std::string> references;
};

void CheckAncestors(const std::vector<const CohesionCandidate*>& all) {
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::set<std::string> mine(all[i]->ancestors.begin(),
                               all[i]->ancestors.end());
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const std::string& a = all[i]->cls->qualified_name;
      const std::string& b = all[j]->cls->qualified_name;
      if (a == b && all[i]->project_id == all[j]->project_id) {
        throw Error(ErrorCode::kPreconditionViolation,
                    a + " appears twice");
      }
      if (mine.count(b) > 0) {
        throw Error(ErrorCode::kPreconditionViolation,
                    b + " is an ancestor of " + a);
      }
      for (const std::string& anc : all[j]->ancestors) {
        if (anc == a) {
          throw Error(ErrorCode::kPreconditionViolation,
                      a + " is an ancestor of " + b);
        }
        if (mine.count(anc) > 0 && !corpus::IsUniversalRoot(anc)) {
          throw Error(ErrorCode::kPreconditionViolation,
                      a + " and " + b + " share ancestor " + anc);
        }
      }
    }
  }
}

Group TargetGroup(const CohesionCandidate& target) {
  const ClassModel& c = *target.cls;
  Group g{&target, {}, {}, {}, {}};
  for (const std::string& m : analysis::BuildMethodGraph(c).methods) {
    g.methods.insert(m);
  }
  for (const corpus::FieldModel& f : c.fields) {
    g.fields.insert(f.name);
    g.defines.insert(f.name);
  }
  for (const corpus::MethodModel& m : c.methods) {
    g.defines.insert(m.name);
    g.references.insert(m.invoked_methods.begin(), m.invoked_methods.end());
  }
  return g;
}

Group SourceGroup(const CohesionCandidate& source, int n, Rng& rng) {
  const ClassModel& c = *source.cls;
  const std::vector<std::string> names =
      analysis::BuildMethodGraph(c).methods;
  if (names.size() < static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kInsufficientMethods,
                c.qualified_name + " has " + std::to_string(names.size()) +
                    " methods, " + std::to_string(n) + " needed");
  }
  Group g{&source, {}, {}, {}, {}};
  for (std::size_t i : rng.SampleIndices(names.size(), n)) {
    g.methods.insert(names[i]);
  }
  for (const corpus::MethodModel& m : c.methods) {
    if (!m.body_span || g.methods.count(m.name) == 0) continue;
    g.fields.insert(m.accessed_fields.begin(), m.accessed_fields.end());
    g.references.insert(m.invoked_methods.begin(), m.invoked_methods.end());
  }
  g.defines = g.methods;
  g.defines.insert(g.fields.begin(), g.fields.end());
  return g;
}

std::string FieldText(const corpus::CompilationUnit& unit,
                      const corpus::FieldModel& f) {
  std::string text = TextWithoutComments(unit, f.prefix_span) + " " + f.name;
  if (f.initializer_span) {
    text += " = " + TextWithoutComments(unit, *f.initializer_span);
  }
  return text + ";";
}

std::string InjectedMembers(const Group& g, const std::string& indent) {
  const corpus::CompilationUnit& unit = *g.candidate->unit;
  const ClassModel& c = *g.candidate->cls;
  std::string out;
  for (const corpus::FieldModel& f : c.fields) {
    if (g.fields.count(f.name) == 0) continue;
    if (out.empty()) out = "\n";
    out += indent + FieldText(unit, f) + "\n";
  }
  for (const corpus::MethodModel& m : c.methods) {
    if (!m.body_span || g.methods.count(m.name) == 0) continue;
    out += "\n" + indent + TextWithoutComments(unit, m.declaration_span) + "\n";
  }
  return out;
}

}  // namespace

std::string RandomClassName(Rng& rng) {
  return "GeneratedClass" + ToHex(rng.NextU64(), 8);
}

MutationRecord SynthesizeIncohesive(
    const CohesionCandidate& target,
    const std::vector<CohesionCandidate>& sources,
    const CohesionInjectionConfig& cfg, Rng& rng) {
  if (cfg.distortion_level < 1 || cfg.distortion_level > 9 ||
      sources.size() != static_cast<std::size_t>(cfg.distortion_level)) {
    throw Error(ErrorCode::kPreconditionViolation,
                "distortion level " + std::to_string(cfg.distortion_level) +
                    " with " + std::to_string(sources.size()) + " sources");
  }
  if (cfg.n_per_source < 1 || cfg.n_per_source > 5) {
    throw Error(ErrorCode::kPreconditionViolation,
                "n_per_source must be in 1..5");
  }
  std::vector<const CohesionCandidate*> all{&target};
  for (const CohesionCandidate& s : sources) all.push_back(&s);
  CheckAncestors(all);

  const std::string name = RandomClassName(rng);
  std::vector<Group> groups{TargetGroup(target)};
  for (const CohesionCandidate& s : sources) {
    groups.push_back(SourceGroup(s, cfg.n_per_source, rng));
  }

  std::map<std::string, std::size_t> owner;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (const std::string& member : groups[i].defines) {
      auto [it, inserted] = owner.emplace(member, i);
      if (!inserted) {
        throw Error(ErrorCode::kNameCollision,
                    "member " + member + " defined by " +
                        groups[it->second].candidate->cls->qualified_name +
                        " and " + groups[i].candidate->cls->qualified_name);
      }
    }
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (const std::string& ref : groups[i].references) {
      auto it = owner.find(ref);
      if (it != owner.end() && it->second != i) {
        throw Error(ErrorCode::kPreconditionViolation,
                    groups[i].candidate->cls->qualified_name +
                        " references " + ref + " of another group");
      }
    }
  }

  // Clone the target under the new name, without comments.
  const corpus::CompilationUnit& unit = *target.unit;
  const ClassModel& cls = *target.cls;
  std::vector<Edit> edits = CommentRemovalEdits(unit, cls);
  const corpus::LexResult lex = corpus::Lex(unit.text);
  for (const corpus::Token& t : lex.tokens) {
    if (t.IsIdentifier() && t.text == cls.simple_name &&
        cls.declaration_span.Contains(Span{t.begin, t.end})) {
      edits.push_back(Edit{Span{t.begin, t.end}, name});
    }
  }
  const std::string indent = MemberIndent(unit, cls);
  std::string injected;
  for (std::size_t i = 1; i < groups.size(); ++i) {
    injected += InjectedMembers(groups[i], indent);
  }
  edits.push_back(MemberInsertion(unit, cls, injected));
  std::stable_sort(edits.begin(), edits.end(),
                   [](const Edit& a, const Edit& b) {
                     return a.span.begin < b.span.begin;
                   });
  const std::string text = corpus::RenderClass(unit, cls, edits) + "\n";
  const std::string path = name + ".java";
  const corpus::CompilationUnit generated = corpus::Reparse(path, text);
  if (generated.classes.empty() ||
      generated.classes.front().simple_name != name) {
    throw Error(ErrorCode::kPreconditionViolation,
                "generated unit does not declare " + name);
  }
  const ClassModel& out = generated.classes.front();

  GroundTruth truth;
  truth.variant = GroundTruth::Variant::kMethodPartition;
  std::map<std::string, std::size_t> block_of;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    truth.blocks.push_back(
        {groups[i].candidate->cls->qualified_name, groups[i].methods});
    for (const std::string& m : groups[i].methods) block_of[m] = i;
  }
  truth.Validate();

  const analysis::MethodGraph graph = analysis::BuildMethodGraph(out);
  if (graph.methods.size() != block_of.size()) {
    throw Error(ErrorCode::kPreconditionViolation,
                name + " does not expose exactly the partitioned methods");
  }
  for (const std::string& m : graph.methods) {
    if (block_of.count(m) == 0) {
      throw Error(ErrorCode::kPreconditionViolation,
                  "unexpected method " + m + " in " + name);
    }
  }
  for (const auto& [a, b] : graph.edges) {
    if (block_of[graph.methods[a]] != block_of[graph.methods[b]]) {
      throw Error(ErrorCode::kPreconditionViolation,
                  graph.methods[a] + " and " + graph.methods[b] +
                      " link two groups");
    }
  }
  const analysis::CohesionReport report = analysis::YalcomOfGraph(graph);
  if (report.components.size() <
          1 + static_cast<std::size_t>(cfg.distortion_level) ||
      report.yalcom <= 0.0) {
    throw Error(ErrorCode::kPreconditionViolation,
                name + " has too few method components");
  }

  MutationRecord record;
  record.kind = MutationKind::kCohesion;
  record.project_id = target.project_id;
  record.rng_seed = rng.seed();
  std::string key = target.project_id + "|" + cls.qualified_name;
  for (const CohesionCandidate& s : sources) {
    key += "|" + s.project_id + "|" + s.cls->qualified_name;
  }
  key += "|" + std::to_string(cfg.n_per_source) + "|" +
         std::to_string(rng.seed());
  record.id = "cohesion-" + cls.simple_name + "-" + ToHex(Fnv1a64(key), 8);
  for (const CohesionCandidate* c : all) {
    record.touched_classes.push_back(c->cls->qualified_name);
  }
  record.edited_units[path] = text;
  record.ground_truth = std::move(truth);
  record.generated_class = name;
  record.distortion_level = cfg.distortion_level;
  record.n_per_source = cfg.n_per_source;
  return record;
}

}  // namespace designprobe::transforms
