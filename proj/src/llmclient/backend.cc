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

#include "designprobe/llmclient/backend.h"

#include <cstdlib>

#include "designprobe/common/error.h"
#include "httplib.h"

namespace designprobe::llmclient {

void ValidateModelSpec(const ModelSpec& spec) {
  if (spec.model_name.empty()) {
    throw Error(ErrorCode::kConfigInvalid, "model spec without a name");
  }
  if (spec.max_in_flight < 1) {
    throw Error(ErrorCode::kConfigInvalid,
                spec.model_name + ": max_in_flight must be at least 1");
  }
  if (spec.max_generation_tokens < 1) {
    throw Error(ErrorCode::kConfigInvalid,
                spec.model_name + ": max_generation_tokens must be positive");
  }
}

HttpBackend::HttpBackend(ModelSpec spec) : spec_(std::move(spec)) {
  ValidateModelSpec(spec_);
  const char* key = std::getenv(spec_.api_key_env.c_str());
  if (key == nullptr || *key == '\0') {
    throw Error(ErrorCode::kConfigInvalid,
                "environment variable " + spec_.api_key_env + " is not set");
  }
  api_key_ = key;
  const std::size_t scheme = spec_.endpoint.find("://");
  if (scheme == std::string::npos) {
    throw Error(ErrorCode::kConfigInvalid,
                "endpoint without a scheme: " + spec_.endpoint);
  }
  const std::size_t slash = spec_.endpoint.find('/', scheme + 3);
  origin_ = spec_.endpoint.substr(0, slash);
  path_ = slash == std::string::npos ? "/" : spec_.endpoint.substr(slash);
}

HttpReply HttpBackend::Send(const promptgen::PromptInstance&,
                            const std::string& request_body) {
  httplib::Client client(origin_);
  client.set_bearer_token_auth(api_key_);
  client.set_connection_timeout(std::chrono::seconds(30));
  client.set_read_timeout(spec_.request_timeout);
  client.set_write_timeout(spec_.request_timeout);
  HttpReply reply;
  auto res = client.Post(path_, request_body, "application/json");
  if (!res) {
    reply.timed_out = res.error() == httplib::Error::Read ||
                      res.error() == httplib::Error::ConnectionTimeout;
    reply.error = httplib::to_string(res.error());
    return reply;
  }
  reply.status = res->status;
  reply.body = res->body;
  return reply;
}

}  // namespace designprobe::llmclient
