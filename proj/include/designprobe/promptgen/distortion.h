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

#ifndef DESIGNPROBE_PROMPTGEN_DISTORTION_H_
#define DESIGNPROBE_PROMPTGEN_DISTORTION_H_

#include <cstddef>

namespace designprobe::promptgen {

// n_distractors / n_total. Throws Error(kZeroTotal) when n_total is 0 and
// Error(kPreconditionViolation) when n_distractors > n_total.
double DistortionRatio(std::size_t n_distractors, std::size_t n_total);

struct DistractorCount {
  std::size_t distractors = 0;
  double requested = 0.0;
  double achieved = 0.0;
};

// d = round(ratio * n_core / (1 - ratio)), at least 1. Throws
// Error(kPreconditionViolation) unless 0 < ratio < 1 and n_core >= 1.
DistractorCount DistractorCountFor(double ratio, std::size_t n_core);

}  // namespace designprobe::promptgen

#endif  // DESIGNPROBE_PROMPTGEN_DISTORTION_H_
