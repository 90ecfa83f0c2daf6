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

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "designprobe/analysis/cohesion.h"
#include "designprobe/analysis/dependency_graph.h"
#include "designprobe/analysis/distractors.h"
#include "designprobe/analysis/injection_sites.h"
#include "designprobe/common/error.h"
#include "designprobe/common/rng.h"
#include "designprobe/common/text.h"
#include "designprobe/corpus/hierarchy.h"
#include "designprobe/corpus/java_parser.h"
#include "fixture_corpus.h"
#include "gtest/gtest.h"

namespace designprobe::analysis {
namespace {

using designprobe::testing::Ledger;
using designprobe::testing::Shop;

// Undirected reachability from `start`, straight from the edge set.
std::set<std::string> Component(const DependencyGraph& g,
                                const std::string& start) {
  std::set<std::string> seen = {start};
  std::deque<std::string> queue = {start};
  while (!queue.empty()) {
    const std::string n = queue.front();
    queue.pop_front();
    for (const Edge& e : g.edges()) {
      for (const auto& [a, b] : {std::pair{e.from, e.to}, {e.to, e.from}}) {
        if (a == n && seen.insert(b).second) queue.push_back(b);
      }
    }
  }
  return seen;
}

// Components of the method graph by repeated flood fill over the raw
// accessed-field and invocation sets.
std::size_t MethodComponents(const corpus::ClassModel& c) {
  std::map<std::string, std::set<std::string>> fields, calls;
  for (const auto& m : c.methods) {
    if (!m.body_span) continue;
    fields[m.name].insert(m.accessed_fields.begin(), m.accessed_fields.end());
    calls[m.name].insert(m.invoked_methods.begin(), m.invoked_methods.end());
  }
  auto linked = [&](const std::string& a, const std::string& b) {
    for (const auto& f : fields[a]) {
      if (fields[b].count(f)) return true;
    }
    return calls[a].count(b) > 0 || calls[b].count(a) > 0;
  };
  std::set<std::string> left;
  for (const auto& [name, _] : fields) left.insert(name);
  std::size_t components = 0;
  while (!left.empty()) {
    ++components;
    std::deque<std::string> queue = {*left.begin()};
    left.erase(left.begin());
    while (!queue.empty()) {
      const std::string n = queue.front();
      queue.pop_front();
      for (auto it = left.begin(); it != left.end();) {
        if (linked(n, *it)) {
          queue.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
  }
  return components;
}

TEST(InjectionSitesTest, FindsConstructorAndSetterSites) {
  const auto sites = FindInjectionSites(Shop(), corpus::ResolveHierarchy(Shop()));
  std::map<std::string, InjectionSite> by_class;
  for (const auto& s : sites) by_class[s.class_name] = s;
  ASSERT_EQ(by_class.size(), 3u);
  const InjectionSite& order = by_class.at("com.acme.shop.OrderService");
  EXPECT_TRUE(order.is_constructor);
  ASSERT_EQ(order.parameters.size(), 2u);
  EXPECT_EQ(order.parameters[1].type_name, "com.acme.shop.Notifier");
  EXPECT_EQ(order.assignment_map.at("repository"), "repository");
  const InjectionSite& report = by_class.at("com.acme.shop.ReportService");
  EXPECT_FALSE(report.is_constructor);
  EXPECT_EQ(report.callable_id, "setSource(OrderRepository)");
  EXPECT_EQ(by_class.count("com.acme.shop.InventoryService"), 0u);
  EXPECT_EQ(by_class.count("com.acme.shop.Cache"), 0u);
  EXPECT_EQ(by_class.count("com.acme.shop.OrderServiceTest"), 0u);
}

TEST(InjectionSitesTest, AbstractClassParametersCount) {
  const auto sites =
      FindInjectionSites(Ledger(), corpus::ResolveHierarchy(Ledger()));
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].parameters[0].type_name, "com.acme.ledger.BaseDao");
}

TEST(InjectionSitesTest, RoundTripsThroughJson) {
  const auto sites = FindInjectionSites(Shop(), corpus::ResolveHierarchy(Shop()));
  const nlohmann::json j = sites;
  const auto back = j.get<std::vector<InjectionSite>>();
  ASSERT_EQ(back.size(), sites.size());
  EXPECT_EQ(back[0].callable_id, sites[0].callable_id);
  EXPECT_EQ(back[0].assignment_map, sites[0].assignment_map);
}

TEST(InjectionSitesTest, ZeroArgConstructible) {
  EXPECT_TRUE(IsZeroArgConstructible(
      *Shop().FindClass("com.acme.shop.StripeGateway")));
  EXPECT_TRUE(IsZeroArgConstructible(
      *Shop().FindClass("com.acme.shop.JdbcOrderRepository")));
  EXPECT_FALSE(IsZeroArgConstructible(
      *Shop().FindClass("com.acme.shop.OrderService")));
}

TEST(DependencyGraphTest, EdgesAndReachability) {
  const DependencyGraph g = BuildDependencyGraph(Shop());
  EXPECT_TRUE(g.TransitivelyDepends("com.acme.shop.OrderService",
                                    "com.acme.shop.Notifier"));
  EXPECT_TRUE(g.TransitivelyDepends("com.acme.shop.ShopApp",
                                    "com.acme.shop.Order"));
  EXPECT_FALSE(g.TransitivelyDepends("com.acme.shop.Notifier",
                                     "com.acme.shop.OrderService"));
  EXPECT_FALSE(g.TransitivelyDepends("com.acme.shop.util.Abacus",
                                     "com.acme.shop.Order"));
  try {
    g.TransitivelyDepends("nope", "com.acme.shop.Order");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownNode);
  }
}

TEST(DependencyGraphTest, ClustersMatchFloodFill) {
  const DependencyGraph g = BuildDependencyGraph(Shop());
  const auto clusters = g.Clusters();
  std::size_t total = 0;
  for (const auto& c : clusters) {
    total += c.members.size();
    EXPECT_EQ(c.members, Component(g, *c.members.begin()));
  }
  EXPECT_EQ(total, g.nodes().size());
}

TEST(CohesionTest, YalcomOfHandBuiltGraphs) {
  MethodGraph g;
  g.methods = {"a", "b", "c", "d"};
  g.edges = {{0, 1}};
  const CohesionReport r = YalcomOfGraph(g);
  EXPECT_EQ(r.components.size(), 3u);
  EXPECT_DOUBLE_EQ(r.yalcom, 2.0 / 3.0);
  g.edges = {{0, 1}, {1, 2}, {2, 3}};
  EXPECT_DOUBLE_EQ(YalcomOfGraph(g).yalcom, 0.0);
  g.methods = {"solo"};
  g.edges.clear();
  EXPECT_DOUBLE_EQ(YalcomOfGraph(g).yalcom, 0.0);
  g.methods.clear();
  try {
    YalcomOfGraph(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoAnalyzedMethods);
  }
}

TEST(CohesionTest, AgreesWithFloodFillOnFixtureClasses) {
  for (const auto* c : Shop().Classes()) {
    const auto graph = BuildMethodGraph(*c);
    if (graph.methods.empty()) continue;
    const std::size_t k = MethodComponents(*c);
    const std::size_t n = graph.methods.size();
    const double expected = n == 1 ? 0.0 : double(k - 1) / double(n - 1);
    EXPECT_DOUBLE_EQ(ComputeYalcom(*c).yalcom, expected) << c->qualified_name;
  }
}

TEST(CohesionTest, OverloadsAndCallsMerge) {
  const auto u = corpus::ParseCompilationUnit(
      "K.java",
      "class K {\n int x; int y;\n void a() { x++; }\n void a(int v) { y = v; }\n"
      " void b() { a(); }\n void c() { }\n}\n");
  const CohesionReport r = ComputeYalcom(u.classes[0]);
  // a merges with its overload and b calls it; c stands alone.
  EXPECT_EQ(r.components.size(), 2u);
  EXPECT_DOUBLE_EQ(r.yalcom, 0.5);
}

TEST(CohesionTest, PoolHoldsConnectedUtilityClasses) {
  const auto pool = CohesivePool(Shop());
  std::set<std::string> names;
  for (const auto* c : pool) names.insert(c->qualified_name);
  EXPECT_EQ(names.size(), 32u);
  EXPECT_TRUE(names.count("com.acme.shop.util.Abacus"));
  EXPECT_FALSE(names.count("com.acme.shop.Order"));
  for (const auto* c : pool) {
    EXPECT_EQ(ComputeYalcom(*c).yalcom, 0.0);
    EXPECT_GT(BuildMethodGraph(*c).methods.size(), 2u);
  }
}

TEST(DistractorsTest, PicksAreDisjointInBothDirections) {
  const DependencyGraph g = BuildDependencyGraph(Shop());
  const std::set<std::string> mutated = {"com.acme.shop.OrderService",
                                         "com.acme.shop.EmailNotifier"};
  Rng rng(17);
  const auto picks = SelectDistractors(g, mutated, 10, rng);
  ASSERT_EQ(picks.size(), 10u);
  std::set<std::string> simple;
  for (const auto& d : picks) {
    simple.insert(SimpleName(d));
    for (const auto& m : mutated) {
      EXPECT_FALSE(g.TransitivelyDepends(d, m));
      EXPECT_FALSE(g.TransitivelyDepends(m, d));
    }
  }
  EXPECT_EQ(simple.size(), picks.size());
}

TEST(DistractorsTest, ShortfallReportsAvailableCount) {
  const DependencyGraph g = BuildDependencyGraph(Shop());
  const std::set<std::string> mutated = {"com.acme.shop.OrderService"};
  std::size_t disjoint = 0;
  for (const auto& c : g.Clusters()) {
    bool clean = true;
    for (const auto& m : mutated) clean = clean && !c.members.count(m);
    disjoint += clean;
  }
  Rng rng(1);
  try {
    SelectDistractors(g, mutated, disjoint + 1, rng);
    FAIL();
  } catch (const InsufficientDisjointClasses& e) {
    EXPECT_EQ(e.available(), disjoint);
    EXPECT_EQ(e.wanted(), disjoint + 1);
  }
  Rng again(1);
  EXPECT_EQ(SelectDistractors(g, mutated, disjoint, again).size(), disjoint);
}

TEST(DistractorsTest, HonoursFilterAndReservedNames) {
  const DependencyGraph g = BuildDependencyGraph(Shop());
  Rng rng(2);
  const auto picks = SelectDistractors(
      g, {"com.acme.shop.OrderService"}, 3, rng,
      [](const std::string& n) { return StartsWith(n, "com.acme.shop.util."); },
      {"Abacus"});
  for (const auto& p : picks) {
    EXPECT_TRUE(StartsWith(p, "com.acme.shop.util."));
    EXPECT_NE(p, "com.acme.shop.util.Abacus");
  }
}

TEST(DistractorsTest, UnknownMutatedClassThrows) {
  const DependencyGraph g = BuildDependencyGraph(Shop());
  Rng rng(2);
  try {
    SelectDistractors(g, {"x.Y"}, 1, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownNode);
  }
}

}  // namespace
}  // namespace designprobe::analysis
