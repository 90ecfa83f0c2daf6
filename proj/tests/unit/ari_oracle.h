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

#ifndef DESIGNPROBE_TESTS_ARI_ORACLE_H_
#define DESIGNPROBE_TESTS_ARI_ORACLE_H_

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace designprobe::testing {

using Partition = std::vector<std::set<std::string>>;

// Pairwise-agreement ARI: walks every element pair instead of building a
// contingency table.
inline double BruteForceAri(const Partition& a, const Partition& b) {
  std::map<std::string, int> la, lb;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& e : a[i]) la[e] = static_cast<int>(i);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (const auto& e : b[i]) lb[e] = static_cast<int>(i);
  std::vector<std::string> items;
  for (const auto& [e, _] : la) items.push_back(e);
  double both = 0, in_a = 0, in_b = 0, pairs = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      const bool sa = la[items[i]] == la[items[j]];
      const bool sb = lb[items[i]] == lb[items[j]];
      both += sa && sb;
      in_a += sa;
      in_b += sb;
      pairs += 1;
    }
  }
  if (pairs == 0) return 1.0;
  const double expected = in_a * in_b / pairs;
  const double max = (in_a + in_b) / 2;
  if (max == expected) return 1.0;
  return (both - expected) / (max - expected);
}

// Every set partition of {0..n-1} as restricted growth strings.
inline std::vector<Partition> AllPartitions(int n) {
  std::vector<Partition> out;
  std::vector<int> label(n, 0);
  std::function<void(int, int)> rec = [&](int i, int max_label) {
    if (i == n) {
      Partition p(max_label + 1);
      for (int k = 0; k < n; ++k) p[label[k]].insert(std::to_string(k));
      out.push_back(p);
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      label[i] = l;
      rec(i + 1, std::max(max_label, l));
    }
  };
  if (n == 0) return {Partition{}};
  label[0] = 0;
  rec(1, 0);
  return out;
}

}  // namespace designprobe::testing

#endif  // DESIGNPROBE_TESTS_ARI_ORACLE_H_
