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

#include "designprobe/llmclient/answers.h"

#include <algorithm>
#include <cctype>

#include "designprobe/common/error.h"
#include "designprobe/common/text.h"

namespace designprobe::llmclient {
namespace {

using promptgen::Concept;
using promptgen::TaskKind;

[[noreturn]] void Malformed(const std::string& why) {
  throw Error(ErrorCode::kMalformedAnswer, why);
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::tolower(ch));
  return out;
}

std::vector<std::string> Lines(std::string_view text) {
  std::vector<std::string> out;
  for (const std::string& line : Split(text, '\n')) {
    std::string_view t = Trim(line);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

// Drops "1." / "1)" / "1:" numbering and "-" / "*" bullets.
std::string_view StripListMarker(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
    ++i;
  }
  if (i > 0 && i < line.size() &&
      (line[i] == '.' || line[i] == ')' || line[i] == ':')) {
    return Trim(line.substr(i + 1));
  }
  if (!line.empty() && (line[0] == '-' || line[0] == '*') &&
      (line.size() == 1 || line[1] == ' ')) {
    return Trim(line.substr(1));
  }
  return line;
}

bool IsIdentifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return IsWordByte(static_cast<unsigned char>(ch));
  });
}

// A name as written by a model: optional backticks and a trailing "()".
std::string CleanName(std::string_view raw) {
  std::string_view s = Trim(raw);
  if (s.size() >= 2 && s.front() == '`' && s.back() == '`') {
    s = Trim(s.substr(1, s.size() - 2));
  }
  if (EndsWith(s, "()")) s = Trim(s.substr(0, s.size() - 2));
  if (!IsIdentifier(s)) Malformed("not a name: " + std::string(raw));
  return std::string(s);
}

bool IsNone(const std::vector<std::string>& lines) {
  return lines.size() == 1 && Lower(StripListMarker(lines[0])) == "none";
}

void SortBlocks(std::vector<std::set<std::string>>& blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
}

}  // namespace

std::string_view ResultStatusName(ResultStatus s) {
  switch (s) {
    case ResultStatus::kOk:
      return "ok";
    case ResultStatus::kMalformedAnswer:
      return "malformed-answer";
    case ResultStatus::kTransportFailure:
      return "transport-failure";
  }
  return "unknown";
}

ResultStatus ParseResultStatus(std::string_view name) {
  for (ResultStatus s : {ResultStatus::kOk, ResultStatus::kMalformedAnswer,
                         ResultStatus::kTransportFailure}) {
    if (ResultStatusName(s) == name) return s;
  }
  throw Error(ErrorCode::kConfigInvalid, "unknown status " + std::string(name));
}

void to_json(nlohmann::json& j, const InferenceResult& r) {
  j = nlohmann::json{{"prompt_id", r.prompt_id},
                     {"model_name", r.model_name},
                     {"raw_text", r.raw_text},
                     {"reasoning_trace", r.reasoning_trace},
                     {"answer_text", r.answer_text},
                     {"usage",
                      {{"prompt_tokens", r.usage.prompt_tokens},
                       {"completion_tokens", r.usage.completion_tokens}}},
                     {"latency_ms", r.latency_ms},
                     {"attempt_count", r.attempt_count},
                     {"status", ResultStatusName(r.status)}};
}

void from_json(const nlohmann::json& j, InferenceResult& r) {
  r.prompt_id = j.at("prompt_id").get<std::string>();
  r.model_name = j.at("model_name").get<std::string>();
  r.raw_text = j.at("raw_text").get<std::string>();
  r.reasoning_trace = j.at("reasoning_trace").get<std::string>();
  r.answer_text = j.at("answer_text").get<std::string>();
  r.usage.prompt_tokens = j.at("usage").at("prompt_tokens").get<std::size_t>();
  r.usage.completion_tokens =
      j.at("usage").at("completion_tokens").get<std::size_t>();
  r.latency_ms = j.at("latency_ms").get<std::int64_t>();
  r.attempt_count = j.at("attempt_count").get<int>();
  r.status = ParseResultStatus(j.at("status").get<std::string>());
}

TraceSplit SplitTrace(std::string_view raw) {
  static constexpr std::string_view kOpen = "<answer>";
  static constexpr std::string_view kClose = "</answer>";
  TraceSplit out;
  const std::size_t close = raw.rfind(kClose);
  if (close != std::string_view::npos) {
    const std::size_t open = raw.rfind(kOpen, close);
    if (open != std::string_view::npos) {
      out.answer_text = std::string(
          Trim(raw.substr(open + kOpen.size(), close - open - kOpen.size())));
    }
  }
  const std::size_t think = raw.find("<think>");
  const std::size_t think_end = raw.find("</think>");
  if (think != std::string_view::npos && think_end != std::string_view::npos &&
      think < think_end) {
    out.reasoning_trace = std::string(
        raw.substr(think + 7, think_end - think - 7));
  } else if (think_end != std::string_view::npos) {
    // Opening tag already stripped.
    out.reasoning_trace = std::string(raw.substr(0, think_end));
  } else {
    out.reasoning_trace = std::string(raw.substr(0, raw.find(kOpen)));
  }
  return out;
}

ParsedAnswer::Variant VariantFor(Concept c, TaskKind t) {
  switch (t) {
    case TaskKind::kVerification:
      return ParsedAnswer::Variant::kLabels;
    case TaskKind::kGuidedGeneration:
      return ParsedAnswer::Variant::kNames;
    case TaskKind::kOpenEndedGeneration:
      return c == Concept::kCoupling ? ParsedAnswer::Variant::kPairs
                                     : ParsedAnswer::Variant::kPartition;
  }
  return ParsedAnswer::Variant::kLabels;
}

ParsedAnswer ParseStructuredAnswer(std::string_view answer_text, Concept c,
                                   TaskKind t, std::size_t expected_labels) {
  const std::vector<std::string> lines = Lines(answer_text);
  if (lines.empty()) Malformed("empty answer");
  ParsedAnswer a;
  a.variant = VariantFor(c, t);
  switch (a.variant) {
    case ParsedAnswer::Variant::kLabels:
      for (const std::string& line : lines) {
        std::string word = Lower(StripListMarker(line));
        if (!word.empty() && word.back() == '.') word.pop_back();
        if (word == "yes") {
          a.labels.push_back(true);
        } else if (word == "no") {
          a.labels.push_back(false);
        } else {
          Malformed("not yes or no: " + line);
        }
      }
      if (expected_labels > 0 && a.labels.size() != expected_labels) {
        Malformed(std::to_string(a.labels.size()) + " labels for " +
                  std::to_string(expected_labels) + " assertions");
      }
      break;
    case ParsedAnswer::Variant::kNames:
      if (IsNone(lines)) break;
      for (const std::string& line : lines) {
        a.names.insert(CleanName(StripListMarker(line)));
      }
      break;
    case ParsedAnswer::Variant::kPairs:
      if (IsNone(lines)) break;
      for (const std::string& line : lines) {
        std::string_view body = StripListMarker(line);
        const std::size_t arrow = body.find("<->");
        if (arrow == std::string_view::npos) Malformed("no <-> in " + line);
        std::string left = CleanName(body.substr(0, arrow));
        std::string right = CleanName(body.substr(arrow + 3));
        if (left == right) Malformed("pair with itself: " + line);
        a.pairs.insert(transforms::MakePair(std::move(left), std::move(right)));
      }
      break;
    case ParsedAnswer::Variant::kPartition: {
      std::set<std::string> seen;
      for (const std::string& line : lines) {
        const std::size_t colon = line.find(':');
        if (colon == std::string::npos) Malformed("no label in " + line);
        std::set<std::string> block;
        for (const std::string& raw : Split(line.substr(colon + 1), ',')) {
          if (Trim(raw).empty()) continue;
          std::string name = CleanName(raw);
          if (!seen.insert(name).second) Malformed(name + " in two groups");
          block.insert(std::move(name));
        }
        if (block.empty()) Malformed("empty group: " + line);
        a.blocks.push_back(std::move(block));
      }
      SortBlocks(a.blocks);
      break;
    }
  }
  return a;
}

std::string SerializeAnswer(const ParsedAnswer& a) {
  std::vector<std::string> lines;
  switch (a.variant) {
    case ParsedAnswer::Variant::kLabels:
      for (bool b : a.labels) lines.push_back(b ? "yes" : "no");
      break;
    case ParsedAnswer::Variant::kNames:
      lines.assign(a.names.begin(), a.names.end());
      if (lines.empty()) lines.push_back("none");
      break;
    case ParsedAnswer::Variant::kPairs:
      for (const auto& [x, y] : a.pairs) lines.push_back(x + " <-> " + y);
      if (lines.empty()) lines.push_back("none");
      break;
    case ParsedAnswer::Variant::kPartition:
      for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        lines.push_back("group" + std::to_string(i + 1) + ": " +
                        Join({a.blocks[i].begin(), a.blocks[i].end()}, ", "));
      }
      break;
  }
  return Join(lines, "\n");
}

ParsedAnswer ExpectedAnswer(const promptgen::PromptInstance& p) {
  ParsedAnswer a;
  a.variant = VariantFor(p.design_concept, p.task);
  for (const promptgen::Assertion& x : p.truth.assertions) {
    a.labels.push_back(x.expected);
  }
  a.names = p.truth.names;
  a.pairs = p.truth.pairs;
  a.blocks = p.truth.blocks;
  SortBlocks(a.blocks);
  return a;
}

}  // namespace designprobe::llmclient
