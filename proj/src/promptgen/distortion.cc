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

#include "designprobe/promptgen/distortion.h"

#include <cmath>
#include <string>

#include "designprobe/common/error.h"

namespace designprobe::promptgen {

double DistortionRatio(std::size_t n_distractors, std::size_t n_total) {
  if (n_total == 0) throw Error(ErrorCode::kZeroTotal, "no classes");
  if (n_distractors > n_total) {
    throw Error(ErrorCode::kPreconditionViolation,
                std::to_string(n_distractors) + " distractors out of " +
                    std::to_string(n_total));
  }
  return static_cast<double>(n_distractors) / static_cast<double>(n_total);
}

DistractorCount DistractorCountFor(double ratio, std::size_t n_core) {
  if (!(ratio > 0.0 && ratio < 1.0) || n_core == 0) {
    throw Error(ErrorCode::kPreconditionViolation,
                "ratio must be in (0, 1) with at least one core class");
  }
  const double exact =
      ratio * static_cast<double>(n_core) / (1.0 - ratio);
  long d = std::lround(exact);
  if (d < 1) d = 1;
  DistractorCount out;
  out.distractors = static_cast<std::size_t>(d);
  out.requested = ratio;
  out.achieved = DistortionRatio(out.distractors, out.distractors + n_core);
  return out;
}

}  // namespace designprobe::promptgen
