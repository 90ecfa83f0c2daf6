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

#ifndef DESIGNPROBE_SAMPLING_TOKENS_H_
#define DESIGNPROBE_SAMPLING_TOKENS_H_

#include <cstddef>
#include <string_view>

namespace designprobe::sampling {

// Maximal runs of word bytes plus every other non-blank byte on its own:
// "class Foo { }" has 4 tokens.
std::size_t CountTokens(std::string_view text);

}  // namespace designprobe::sampling

#endif  // DESIGNPROBE_SAMPLING_TOKENS_H_
