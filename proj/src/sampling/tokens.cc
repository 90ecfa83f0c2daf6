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

#include "designprobe/sampling/tokens.h"

#include <cctype>

#include "designprobe/common/text.h"

namespace designprobe::sampling {

std::size_t CountTokens(std::string_view text) {
  std::size_t count = 0;
  bool in_word = false;
  for (unsigned char ch : text) {
    if (IsWordByte(ch)) {
      if (!in_word) ++count;
      in_word = true;
      continue;
    }
    in_word = false;
    if (!std::isspace(ch)) ++count;
  }
  return count;
}

}  // namespace designprobe::sampling
