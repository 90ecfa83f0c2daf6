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

#include <regex>
#include <set>
#include <string>
#include <vector>

#include "designprobe/analysis/cohesion.h"
#include "designprobe/analysis/injection_sites.h"
#include "designprobe/common/error.h"
#include "designprobe/common/rng.h"
#include "designprobe/common/text.h"
#include "designprobe/corpus/hierarchy.h"
#include "designprobe/corpus/java_parser.h"
#include "designprobe/corpus/render.h"
#include "designprobe/transforms/coupling_mutations.h"
#include "designprobe/transforms/incohesive.h"
#include "designprobe/transforms/mutation_record.h"
#include "designprobe/transforms/skeleton.h"
#include "fixture_corpus.h"
#include "gtest/gtest.h"

namespace designprobe::transforms {
namespace {

using corpus::ClassModel;
using corpus::CompilationUnit;
using designprobe::testing::Ledger;
using designprobe::testing::Shop;

const corpus::TypeHierarchy& ShopHierarchy() {
  static const corpus::TypeHierarchy h = corpus::ResolveHierarchy(Shop());
  return h;
}

analysis::InjectionSite SiteOf(const std::string& cls) {
  for (const auto& s : analysis::FindInjectionSites(Shop(), ShopHierarchy())) {
    if (s.class_name == cls) return s;
  }
  throw std::runtime_error("no site for " + cls);
}

const ClassModel& ClassIn(const CompilationUnit& u, const std::string& name) {
  for (const auto& c : u.classes) {
    if (c.qualified_name == name) return c;
  }
  throw std::runtime_error(name + " missing");
}

CompilationUnit EditedUnit(const MutationRecord& rec, const std::string& cls) {
  const ClassModel* c = Shop().FindClass(cls);
  return corpus::ParseCompilationUnit(c->unit_path,
                                      rec.edited_units.at(c->unit_path));
}

std::size_t Instantiations(const ClassModel& c, const std::string& simple) {
  std::size_t n = 0;
  auto scan = [&](const std::vector<corpus::TypeUse>& uses) {
    for (const auto& u : uses) {
      n += u.kind == corpus::TypeUseKind::kInstantiation && u.name == simple;
    }
  };
  scan(c.type_uses);
  for (const auto& m : c.methods) scan(m.type_uses);
  for (const auto& m : c.constructors) scan(m.type_uses);
  return n;
}

TEST(CouplingMutationTest, DidRemovesParametersAndRepairsCallers) {
  Rng rng(1);
  const MutationRecord rec =
      ApplyDid(Shop(), ShopHierarchy(), SiteOf("com.acme.shop.OrderService"), rng);
  EXPECT_EQ(rec.kind, MutationKind::kDid);
  EXPECT_EQ(rec.consumer, "com.acme.shop.OrderService");
  EXPECT_EQ(rec.mutated_callable_id, "OrderService()");
  ASSERT_EQ(rec.touched_classes.size(), 3u);
  EXPECT_EQ(rec.ground_truth.pairs.size(), 2u);
  for (const auto& [path, text] : rec.edited_units) {
    EXPECT_NO_THROW(corpus::Reparse(path, text)) << path;
  }
  const CompilationUnit u = EditedUnit(rec, "com.acme.shop.OrderService");
  const ClassModel& c = ClassIn(u, "com.acme.shop.OrderService");
  ASSERT_EQ(c.constructors.size(), 1u);
  EXPECT_TRUE(c.constructors[0].parameters.empty());
  for (const auto& [iface, impl] : rec.chosen_implementations) {
    EXPECT_EQ(Instantiations(c, SimpleName(impl)), 1u) << impl;
  }
  const CompilationUnit app = EditedUnit(rec, "com.acme.shop.ShopApp");
  EXPECT_NE(app.text.find("new OrderService()"), std::string::npos);
}

TEST(CouplingMutationTest, UidKeepsTheSignature) {
  Rng rng(2);
  const auto site = SiteOf("com.acme.shop.BillingService");
  const MutationRecord rec = ApplyUid(Shop(), ShopHierarchy(), site, rng);
  const ClassModel* before = Shop().FindClass("com.acme.shop.BillingService");
  const CompilationUnit u = EditedUnit(rec, "com.acme.shop.BillingService");
  const ClassModel& after = ClassIn(u, "com.acme.shop.BillingService");
  const auto& unit_before = Shop().UnitOf(*before);
  EXPECT_EQ(before->constructors[0].parameter_list_span.Of(unit_before.text),
            after.constructors[0].parameter_list_span.Of(u.text));
  EXPECT_EQ(rec.edited_units.size(), 1u);
  const std::string impl =
      rec.chosen_implementations.at("com.acme.shop.PaymentGateway");
  EXPECT_TRUE(impl == "com.acme.shop.StripeGateway" ||
              impl == "com.acme.shop.LegacyGateway");
  EXPECT_EQ(Instantiations(after, SimpleName(impl)), 1u);
}

TEST(CouplingMutationTest, IddUsesAFactoryOnTheImplementation) {
  Rng rng(3);
  const MutationRecord rec = ApplyIdd(Shop(), ShopHierarchy(),
                                      SiteOf("com.acme.shop.ReportService"), rng);
  const std::string impl =
      rec.chosen_implementations.at("com.acme.shop.OrderRepository");
  const CompilationUnit consumer_unit =
      EditedUnit(rec, "com.acme.shop.ReportService");
  const ClassModel& consumer =
      ClassIn(consumer_unit, "com.acme.shop.ReportService");
  EXPECT_EQ(Instantiations(consumer, SimpleName(impl)), 0u);
  EXPECT_NE(consumer_unit.text.find(SimpleName(impl) + ".create()"),
            std::string::npos);
  const CompilationUnit impl_unit = EditedUnit(rec, impl);
  const ClassModel& factory_owner = ClassIn(impl_unit, impl);
  const auto* create = factory_owner.FindCallable("create()");
  ASSERT_NE(create, nullptr);
  EXPECT_TRUE(create->modifiers.is_static);
  EXPECT_EQ(rec.preserve.at(impl).count("create()"), 1u);
}

TEST(CouplingMutationTest, SameSeedSameRecord) {
  const auto site = SiteOf("com.acme.shop.OrderService");
  Rng a(9), b(9);
  const nlohmann::json ja = ApplyUid(Shop(), ShopHierarchy(), site, a);
  const nlohmann::json jb = ApplyUid(Shop(), ShopHierarchy(), site, b);
  EXPECT_EQ(ja.dump(), jb.dump());
}

TEST(CouplingMutationTest, StaleSiteIsUnreachable) {
  auto site = SiteOf("com.acme.shop.OrderService");
  site.callable_id = "OrderService(Nothing)";
  Rng rng(1);
  try {
    ApplyDid(Shop(), ShopHierarchy(), site, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnreachable);
  }
}

TEST(CouplingMutationTest, ImplementorsExcludeTheConsumer) {
  const auto impls = ConstructibleImplementors(
      Shop(), ShopHierarchy(), "com.acme.shop.Notifier",
      "com.acme.shop.OrderService");
  EXPECT_EQ(impls, (std::vector<std::string>{"com.acme.shop.EmailNotifier",
                                             "com.acme.shop.SmsNotifier"}));
}

TEST(MutationRecordTest, JsonRoundTrip) {
  Rng rng(4);
  const MutationRecord rec =
      ApplyIdd(Shop(), ShopHierarchy(), SiteOf("com.acme.shop.OrderService"), rng);
  const nlohmann::json j = rec;
  const MutationRecord back = j.get<MutationRecord>();
  EXPECT_EQ(nlohmann::json(back).dump(), j.dump());
  EXPECT_NO_THROW(back.ground_truth.Validate());
}

TEST(SkeletonTest, RemovesBodiesExceptPreserved) {
  const ClassModel* c = Shop().FindClass("com.acme.shop.InventoryService");
  const std::string text =
      Skeletonize(Shop().UnitOf(*c), *c, {"warehouseName()"});
  EXPECT_NE(text.find("public boolean reserve(int units) { return false; }"),
            std::string::npos);
  EXPECT_NE(text.find("return warehouse;"), std::string::npos);
  EXPECT_NE(text.find("this.capacity = capacity;"), std::string::npos);
}

TEST(SkeletonTest, DefaultBodies) {
  EXPECT_EQ(DefaultBody("void"), "{ }");
  EXPECT_EQ(DefaultBody("boolean"), "{ return false; }");
  EXPECT_EQ(DefaultBody("long"), "{ return 0; }");
  EXPECT_EQ(DefaultBody("Order"), "{ return null; }");
}

TEST(SkeletonTest, StripsEveryInstantiation) {
  const auto u = corpus::ParseCompilationUnit(
      "W.java",
      "class W {\n"
      "  private Helper h = new Helper();\n"
      "  void run() {\n"
      "    Helper a = new Helper(), b = null;\n"
      "    new Helper().go();\n"
      "    if (a == null) {\n"
      "      a = new Helper();\n"
      "    }\n"
      "  }\n"
      "  Helper make() { return new Helper(); }\n"
      "}\n");
  const std::string text = StripInstantiations(u, u.classes[0]);
  EXPECT_EQ(text.find("new "), std::string::npos) << text;
  const auto back = corpus::Reparse("W.java", text);
  EXPECT_EQ(back.classes[0].methods.size(), 2u);
}

TEST(SkeletonTest, DistractorHasNoCommentsOrBodies) {
  const ClassModel* c = Shop().FindClass("com.acme.shop.LegacyGateway");
  const std::string text = RenderDistractor(Shop().UnitOf(*c), *c);
  EXPECT_EQ(text.find("/**"), std::string::npos);
  EXPECT_EQ(text.find("CEILING;"), std::string::npos);
  EXPECT_NE(text.find("public boolean charge(double amount) { return false; }"),
            std::string::npos);
}

std::vector<CohesionCandidate> Candidates() {
  std::vector<CohesionCandidate> out;
  for (const auto* c : analysis::CohesivePool(Shop())) {
    out.push_back({Shop().id(), &Shop().UnitOf(*c), c,
                   ShopHierarchy().AncestorsOf(c->qualified_name)});
  }
  return out;
}

TEST(IncohesiveTest, EveryLevelIsSound) {
  const auto pool = Candidates();
  ASSERT_GE(pool.size(), 10u);
  const std::regex name_re("GeneratedClass[0-9a-f]{8}");
  for (int level = 1; level <= 9; ++level) {
    std::vector<CohesionCandidate> sources(pool.begin() + 1,
                                           pool.begin() + 1 + level);
    Rng rng(100 + level);
    const MutationRecord rec =
        SynthesizeIncohesive(pool[0], sources, {level, 2}, rng);
    EXPECT_TRUE(std::regex_match(rec.generated_class, name_re));
    ASSERT_EQ(rec.edited_units.size(), 1u);
    const auto& [path, text] = *rec.edited_units.begin();
    const CompilationUnit u = corpus::Reparse(path, text);
    const ClassModel& c = u.classes.front();
    EXPECT_EQ(c.simple_name, rec.generated_class);
    const auto report = analysis::ComputeYalcom(c);
    EXPECT_GE(report.components.size(), static_cast<std::size_t>(1 + level));
    EXPECT_GT(report.yalcom, 0.0);
    ASSERT_EQ(rec.ground_truth.blocks.size(), static_cast<std::size_t>(1 + level));
    std::map<std::string, std::size_t> block_of;
    for (std::size_t b = 0; b < rec.ground_truth.blocks.size(); ++b) {
      for (const auto& m : rec.ground_truth.blocks[b].methods) block_of[m] = b;
    }
    const auto graph = analysis::BuildMethodGraph(c);
    for (const auto& [i, j] : graph.edges) {
      EXPECT_EQ(block_of.at(graph.methods[i]), block_of.at(graph.methods[j]));
    }
    for (std::size_t b = 1; b < rec.ground_truth.blocks.size(); ++b) {
      EXPECT_EQ(rec.ground_truth.blocks[b].methods.size(), 2u);
    }
  }
}

TEST(IncohesiveTest, RejectsBadLevelsAndSharedClasses) {
  const auto pool = Candidates();
  Rng rng(1);
  try {
    SynthesizeIncohesive(pool[0], {pool[1]}, {2, 2}, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolation);
  }
  try {
    SynthesizeIncohesive(pool[0], {pool[0]}, {1, 2}, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolation);
  }
  try {
    SynthesizeIncohesive(pool[0], {pool[1]}, {1, 9}, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolation);
  }
}

TEST(IncohesiveTest, SharedAncestorIsRejected) {
  const corpus::TypeHierarchy h = corpus::ResolveHierarchy(Ledger());
  const ClassModel* a = Ledger().FindClass("com.acme.ledger.AccountDao");
  const ClassModel* j = Ledger().FindClass("com.acme.ledger.JournalDao");
  const CohesionCandidate ca{Ledger().id(), &Ledger().UnitOf(*a), a,
                             h.AncestorsOf(a->qualified_name)};
  const CohesionCandidate cj{Ledger().id(), &Ledger().UnitOf(*j), j,
                             h.AncestorsOf(j->qualified_name)};
  Rng rng(1);
  try {
    SynthesizeIncohesive(ca, {cj}, {1, 1}, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolation);
  }
}

TEST(IncohesiveTest, TooFewMethodsInSource) {
  const auto pool = Candidates();
  Rng rng(1);
  try {
    SynthesizeIncohesive(pool[0], {pool[1]}, {1, 5}, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientMethods);
  }
}

}  // namespace
}  // namespace designprobe::transforms
