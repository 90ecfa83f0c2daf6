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

#ifndef DESIGNPROBE_COMMON_HASH_H_
#define DESIGNPROBE_COMMON_HASH_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace designprobe {

// 64-bit FNV-1a. Stable across platforms; used for ids and content hashes.
std::uint64_t Fnv1a64(std::string_view bytes,
                      std::uint64_t basis = 0xcbf29ce484222325ULL);

// Lowercase hex of the low `digits` nibbles.
std::string ToHex(std::uint64_t value, int digits = 16);

}  // namespace designprobe

#endif  // DESIGNPROBE_COMMON_HASH_H_
