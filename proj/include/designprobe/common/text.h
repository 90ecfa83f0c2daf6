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

#ifndef DESIGNPROBE_COMMON_TEXT_H_
#define DESIGNPROBE_COMMON_TEXT_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace designprobe {

std::string_view Trim(std::string_view s);
std::vector<std::string> Split(std::string_view s, char sep);
std::string Join(const std::vector<std::string>& parts, std::string_view sep);
bool StartsWith(std::string_view s, std::string_view prefix);
bool EndsWith(std::string_view s, std::string_view suffix);

// Word characters for tokenizing and boundary matching. Bytes >= 0x80 count
// as word characters so UTF-8 identifiers are not split.
bool IsWordByte(unsigned char c);

// True iff `word` occurs in `text` with no word byte directly before or
// after it.
bool ContainsWord(std::string_view text, std::string_view word);

// The last dotted segment: "a.b.C" -> "C".
std::string SimpleName(std::string_view qualified);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

// Shortest decimal form that reads back to the same double ("0.1", "3").
std::string FormatNumber(double value);

}  // namespace designprobe

#endif  // DESIGNPROBE_COMMON_TEXT_H_
