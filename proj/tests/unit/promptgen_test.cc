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

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "designprobe/analysis/cohesion.h"
#include "designprobe/analysis/injection_sites.h"
#include "designprobe/common/error.h"
#include "designprobe/common/rng.h"
#include "designprobe/common/text.h"
#include "designprobe/corpus/hierarchy.h"
#include "designprobe/promptgen/assemble.h"
#include "designprobe/promptgen/distortion.h"
#include "designprobe/promptgen/prompt_instance.h"
#include "designprobe/promptgen/templates.h"
#include "designprobe/sampling/tokens.h"
#include "designprobe/transforms/coupling_mutations.h"
#include "designprobe/transforms/incohesive.h"
#include "designprobe/transforms/skeleton.h"
#include "fixture_corpus.h"
#include "gtest/gtest.h"

namespace designprobe::promptgen {
namespace {

using designprobe::testing::Shop;

TEST(DistortionTest, RatioOfCounts) {
  EXPECT_DOUBLE_EQ(DistortionRatio(1, 4), 0.25);
  EXPECT_DOUBLE_EQ(DistortionRatio(0, 4), 0.0);
  try {
    DistortionRatio(0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroTotal);
  }
}

TEST(DistortionTest, CountMeetsToleranceAndIsNearOptimal) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (int tenth = 1; tenth <= 9; ++tenth) {
      const double r = tenth / 10.0;
      const DistractorCount c = DistractorCountFor(r, n);
      const double total = static_cast<double>(n + c.distractors);
      EXPECT_GE(c.distractors, 1u);
      EXPECT_LE(std::fabs(c.achieved - r), 1.0 / total) << n << " " << r;
      EXPECT_DOUBLE_EQ(c.achieved, c.distractors / total);
      // Exhaustive search for the best positive count.
      double best = 1e9;
      for (std::size_t d = 1; d < 2000; ++d) {
        best = std::min(best, std::fabs(double(d) / double(n + d) - r));
      }
      EXPECT_LE(std::fabs(c.achieved - r), best + 0.5 / total);
    }
  }
}

TEST(DistortionTest, RejectsOutOfRangeRatios) {
  EXPECT_THROW(DistractorCountFor(0.0, 2), Error);
  EXPECT_THROW(DistractorCountFor(1.0, 2), Error);
  EXPECT_THROW(DistractorCountFor(0.5, 0), Error);
}

TEST(TemplatesTest, AllSixLoadWithExpectedPlaceholders) {
  for (Concept c : {Concept::kCoupling, Concept::kCohesion}) {
    for (TaskKind t : kAllTasks) {
      const PromptTemplate tmpl = LoadTemplate(DefaultTemplateDir(), c, t);
      const auto ph = tmpl.Placeholders();
      EXPECT_TRUE(ph.count("code")) << TemplateFileName(c, t);
      EXPECT_NE(tmpl.text.find("<answer>"), std::string::npos);
    }
  }
  EXPECT_EQ(TemplateFileName(Concept::kCoupling, TaskKind::kOpenEndedGeneration),
            "coupling_open_ended.txt");
}

TEST(TemplatesTest, UnboundPlaceholderThrows) {
  PromptTemplate t;
  t.text = "Look at {code} and {seed}.";
  EXPECT_EQ(RenderTemplate(t, {{"code", "X"}, {"seed", "Y"}}), "Look at X and Y.");
  try {
    RenderTemplate(t, {{"code", "X"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnboundPlaceholder);
  }
}

struct CouplingFixture {
  transforms::MutationRecord rec;
  std::vector<ClassText> core;
  std::vector<ClassText> distractors;
};

CouplingFixture MakeCoupling() {
  const auto h = corpus::ResolveHierarchy(Shop());
  CouplingFixture f;
  for (const auto& s : analysis::FindInjectionSites(Shop(), h)) {
    if (s.class_name != "com.acme.shop.OrderService") continue;
    Rng rng(5);
    f.rec = transforms::ApplyUid(Shop(), h, s, rng);
  }
  for (const std::string& name : f.rec.touched_classes) {
    const auto* c = Shop().FindClass(name);
    f.core.push_back({name, c->simple_name,
                      transforms::Skeletonize(Shop().UnitOf(*c), *c)});
  }
  for (const char* name : {"com.acme.shop.util.Abacus",
                           "com.acme.shop.util.Compass",
                           "com.acme.shop.Cache"}) {
    const auto* c = Shop().FindClass(name);
    f.distractors.push_back(
        {name, c->simple_name,
         transforms::RenderDistractor(Shop().UnitOf(*c), *c)});
  }
  return f;
}

TEST(AssembleTest, CouplingPromptsCloseOverTheirTruth) {
  const CouplingFixture f = MakeCoupling();
  for (TaskKind t : kAllTasks) {
    Rng rng(8);
    const PromptInstance p = AssembleCouplingPrompt(
        f.rec, f.core, f.distractors, t, 0.5,
        LoadTemplate(DefaultTemplateDir(), Concept::kCoupling, t), rng);
    EXPECT_EQ(p.id, f.rec.id + "-" + std::string(TaskKindName(t)) + "-0.5");
    EXPECT_DOUBLE_EQ(p.distortion_achieved, 0.5);
    EXPECT_EQ(p.provenance.entities.size(), 6u);
    for (const auto& e : p.provenance.entities) {
      EXPECT_TRUE(ContainsWord(p.prompt, e)) << e;
    }
    EXPECT_EQ(p.token_count, sampling::CountTokens(p.prompt));
    switch (t) {
      case TaskKind::kVerification: {
        std::size_t yes = 0;
        for (const auto& a : p.truth.assertions) yes += a.expected;
        const std::size_t no = p.truth.assertions.size() - yes;
        EXPECT_EQ(yes, 2u);
        EXPECT_EQ(no, 2u);
        break;
      }
      case TaskKind::kGuidedGeneration:
        EXPECT_EQ(p.truth.seed, "OrderService");
        EXPECT_EQ(p.truth.names.size(), 2u);
        break;
      case TaskKind::kOpenEndedGeneration:
        EXPECT_EQ(p.truth.pairs.size(), 2u);
        break;
    }
  }
}

TEST(AssembleTest, ShuffleSeedDeterminesPrompt) {
  const CouplingFixture f = MakeCoupling();
  const auto tmpl = LoadTemplate(DefaultTemplateDir(), Concept::kCoupling,
                                 TaskKind::kOpenEndedGeneration);
  Rng a(8), b(8);
  EXPECT_EQ(AssembleCouplingPrompt(f.rec, f.core, f.distractors,
                                   TaskKind::kOpenEndedGeneration, 0.5, tmpl, a)
                .prompt,
            AssembleCouplingPrompt(f.rec, f.core, f.distractors,
                                   TaskKind::kOpenEndedGeneration, 0.5, tmpl, b)
                .prompt);
}

TEST(AssembleTest, WrongTemplateIsRejected) {
  const CouplingFixture f = MakeCoupling();
  Rng rng(1);
  EXPECT_THROW(
      AssembleCouplingPrompt(
          f.rec, f.core, f.distractors, TaskKind::kVerification, 0.5,
          LoadTemplate(DefaultTemplateDir(), Concept::kCohesion,
                       TaskKind::kVerification),
          rng),
      Error);
}

TEST(AssembleTest, CohesionPromptsUseMethodNames) {
  const auto h = corpus::ResolveHierarchy(Shop());
  std::vector<transforms::CohesionCandidate> pool;
  for (const auto* c : analysis::CohesivePool(Shop())) {
    pool.push_back({Shop().id(), &Shop().UnitOf(*c), c,
                    h.AncestorsOf(c->qualified_name)});
  }
  Rng rng(3);
  const auto rec = transforms::SynthesizeIncohesive(
      pool[2], {pool[5], pool[7]}, {2, 2}, rng);
  for (TaskKind t : kAllTasks) {
    Rng r(4);
    const PromptInstance p = AssembleCohesionPrompt(
        rec, t, LoadTemplate(DefaultTemplateDir(), Concept::kCohesion, t), r);
    EXPECT_EQ(p.distortion_requested, 2.0);
    EXPECT_EQ(p.DistortionKey(), "2");
    std::set<std::string> all;
    for (const auto& b : rec.ground_truth.blocks) {
      all.insert(b.methods.begin(), b.methods.end());
    }
    EXPECT_EQ(std::set<std::string>(p.provenance.entities.begin(),
                                    p.provenance.entities.end()),
              all);
    if (t == TaskKind::kOpenEndedGeneration) {
      EXPECT_EQ(p.truth.blocks.size(), 3u);
    }
    if (t == TaskKind::kGuidedGeneration) {
      EXPECT_FALSE(p.truth.names.empty());
      EXPECT_EQ(p.truth.names.count(p.truth.seed), 0u);
    }
  }
}

TEST(PromptInstanceTest, JsonRoundTrip) {
  const CouplingFixture f = MakeCoupling();
  Rng rng(8);
  const PromptInstance p = AssembleCouplingPrompt(
      f.rec, f.core, f.distractors, TaskKind::kVerification, 0.5,
      LoadTemplate(DefaultTemplateDir(), Concept::kCoupling,
                   TaskKind::kVerification),
      rng);
  const nlohmann::json j = p;
  EXPECT_EQ(nlohmann::json(j.get<PromptInstance>()).dump(), j.dump());
}

}  // namespace
}  // namespace designprobe::promptgen
