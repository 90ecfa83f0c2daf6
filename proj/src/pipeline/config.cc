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

#include "designprobe/pipeline/config.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "designprobe/common/error.h"
#include "designprobe/common/hash.h"
#include "designprobe/common/text.h"
#include "designprobe/llmclient/mock_model.h"
#include "designprobe/promptgen/templates.h"

namespace designprobe::pipeline {

namespace {

[[noreturn]] void Invalid(const std::string& message) {
  throw Error(ErrorCode::kConfigInvalid, message);
}

std::uint64_t ParseU64(std::string_view key, std::string_view v) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    Invalid(std::string(key) + ": not an unsigned integer: " + std::string(v));
  }
  return out;
}

double ParseDouble(std::string_view key, std::string_view v) {
  const std::string s(v);
  char* end = nullptr;
  const double out = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    Invalid(std::string(key) + ": not a number: " + s);
  }
  return out;
}

bool ParseBool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  Invalid(std::string(key) + ": not a boolean: " + std::string(v));
}

std::vector<std::string> List(std::string_view v) {
  std::vector<std::string> out;
  for (const std::string& item : Split(v, ',')) {
    std::string_view t = Trim(item);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

llmclient::ModelSpec& ModelNamed(PipelineConfig& config,
                                 const std::string& name) {
  for (auto& m : config.models) {
    if (m.model_name == name) return m;
  }
  config.models.push_back(llmclient::ModelSpec{});
  config.models.back().model_name = name;
  return config.models.back();
}

void SetModelKey(PipelineConfig& config, std::string_view key,
                 std::string_view value) {
  const std::string rest(key.substr(6));
  const std::size_t dot = rest.rfind('.');
  if (dot == std::string::npos || dot == 0) {
    Invalid("model key without a field: " + std::string(key));
  }
  llmclient::ModelSpec& m = ModelNamed(config, rest.substr(0, dot));
  const std::string field = rest.substr(dot + 1);
  if (field == "endpoint") {
    m.endpoint = value;
  } else if (field == "api_key_env") {
    m.api_key_env = value;
  } else if (field == "max_tokens") {
    m.max_generation_tokens = ParseU64(key, value);
  } else if (field == "timeout_s") {
    m.request_timeout = std::chrono::seconds(ParseU64(key, value));
  } else if (field == "max_in_flight") {
    m.max_in_flight = ParseU64(key, value);
  } else if (field == "rate_limit_per_minute") {
    m.rate_limit_per_minute = ParseU64(key, value);
  } else {
    Invalid("unknown model field: " + std::string(key));
  }
}

}  // namespace

PipelineConfig ParseConfig(std::string_view text) {
  PipelineConfig config;
  int line_no = 0;
  for (const std::string& raw : Split(text, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      Invalid("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string value(Trim(line.substr(eq + 1)));
    if (key == "corpus") {
      config.corpus.clear();
      for (const std::string& p : List(value)) config.corpus.emplace_back(p);
    } else if (key == "master_seed") {
      config.master_seed = ParseU64(key, value);
    } else if (key == "n_per_source") {
      config.n_per_source = static_cast<int>(ParseU64(key, value));
    } else if (key == "coupling_ratios") {
      config.coupling_ratios.clear();
      for (const std::string& r : List(value)) {
        config.coupling_ratios.push_back(ParseDouble(key, r));
      }
    } else if (key == "cohesion_levels") {
      config.cohesion_levels.clear();
      for (const std::string& l : List(value)) {
        config.cohesion_levels.push_back(static_cast<int>(ParseU64(key, l)));
      }
    } else if (key == "cohesion_instances_per_level") {
      config.cohesion_instances_per_level = ParseU64(key, value);
    } else if (key == "per_cell") {
      config.per_cell = ParseU64(key, value);
    } else if (key == "verification_positives") {
      config.verification_positives = ParseU64(key, value);
    } else if (key == "verification_negatives") {
      config.verification_negatives = ParseU64(key, value);
    } else if (key == "template_dir") {
      config.template_dir = value;
    } else if (key == "out") {
      config.out = value;
    } else if (key == "mock") {
      config.mock = value;
    } else if (key == "emit_graph") {
      config.emit_graph = ParseBool(key, value);
    } else if (StartsWith(key, "model.")) {
      SetModelKey(config, key, value);
    } else {
      Invalid("unknown key: " + key);
    }
  }
  return config;
}

PipelineConfig LoadConfig(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    Invalid("config file not found: " + path.string());
  }
  return ParseConfig(ReadFile(path));
}

void ValidateConfig(const PipelineConfig& config) {
  if (config.corpus.empty()) Invalid("corpus is empty");
  if (config.n_per_source < 1 || config.n_per_source > 5) {
    Invalid("n_per_source must be in 1..5");
  }
  if (config.coupling_ratios.empty()) Invalid("coupling_ratios is empty");
  for (double r : config.coupling_ratios) {
    if (!(r > 0.0 && r < 1.0)) Invalid("coupling ratio outside (0,1)");
  }
  if (config.cohesion_levels.empty()) Invalid("cohesion_levels is empty");
  for (int l : config.cohesion_levels) {
    if (l < 1 || l > 9) Invalid("cohesion level outside 1..9");
  }
  if (config.per_cell < 1) Invalid("per_cell must be positive");
  if (config.verification_positives + config.verification_negatives == 0) {
    Invalid("verification needs at least one assertion");
  }
  if (!config.mock.empty()) llmclient::ParseMockMode(config.mock);
  for (const auto& m : config.models) llmclient::ValidateModelSpec(m);
}

std::string CanonicalConfig(const PipelineConfig& config) {
  std::ostringstream out;
  out << "corpus=";
  for (const auto& p : config.corpus) {
    out << std::filesystem::weakly_canonical(p).generic_string() << ';';
  }
  out << "\nmaster_seed=" << config.master_seed
      << "\nn_per_source=" << config.n_per_source << "\ncoupling_ratios=";
  for (double r : config.coupling_ratios) out << FormatNumber(r) << ';';
  out << "\ncohesion_levels=";
  for (int l : config.cohesion_levels) out << l << ';';
  out << "\ncohesion_instances_per_level="
      << config.cohesion_instances_per_level
      << "\nper_cell=" << config.per_cell
      << "\nverification=" << config.verification_positives << '/'
      << config.verification_negatives << "\ntemplate_dir="
      << (config.template_dir.empty() ? promptgen::DefaultTemplateDir()
                                      : config.template_dir)
             .generic_string()
      << "\nmock=" << config.mock
      << "\nemit_graph=" << (config.emit_graph ? 1 : 0) << '\n';
  for (const auto& m : config.models) {
    out << "model=" << m.model_name << ';' << m.endpoint << ';'
        << m.max_generation_tokens << '\n';
  }
  return out.str();
}

std::string ConfigHash(const PipelineConfig& config) {
  return ToHex(Fnv1a64(CanonicalConfig(config)));
}

}  // namespace designprobe::pipeline
