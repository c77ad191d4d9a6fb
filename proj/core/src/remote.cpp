// Copyright 2026 The entfix Authors
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

#include "entfix/remote.hpp"

#include <chrono>
#include <cmath>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "entfix/errors.hpp"

namespace entfix {

CompletionClient::CompletionClient(std::string endpoint, Options options)
    : endpoint_(std::move(endpoint)), options_(options) {
  if (endpoint_.rfind("http://", 0) != 0 &&
      endpoint_.rfind("https://", 0) != 0) {
    endpoint_ = "http://" + endpoint_;
  }
}

std::string CompletionClient::complete(const std::string& context) const {
  nlohmann::json body;
  body["context"] = context;
  body["max_tokens"] = options_.max_tokens;
  body["greedy"] = options_.greedy;
  const std::string payload = body.dump();

  std::string last_error;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    if (attempt > 0) {
      const int backoff = options_.backoff_initial_ms * (1 << (attempt - 1));
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
    }
    // A fresh client per request keeps concurrent calls independent.
    httplib::Client http(endpoint_);
    const auto timeout = std::chrono::microseconds(
        static_cast<long long>(options_.timeout_seconds * 1e6));
    http.set_connection_timeout(timeout);
    http.set_read_timeout(timeout);
    http.set_write_timeout(timeout);

    httplib::Result res =
        http.Post(kCompletePath, payload, "application/json");
    if (!res) {
      last_error = "transport failure: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status != 200) {
      last_error = "completion service returned status " +
                   std::to_string(res->status);
      continue;
    }
    nlohmann::json parsed = nlohmann::json::parse(res->body, nullptr,
                                                  /*allow_exceptions=*/false);
    if (parsed.is_discarded() || !parsed.contains("text") ||
        !parsed["text"].is_string()) {
      throw TransportError("malformed completion response body from " +
                           endpoint_);
    }
    std::string text = parsed["text"].get<std::string>();
    if (text.empty()) {
      throw TransportError("empty completion from " + endpoint_);
    }
    return text;
  }
  throw TransportError("completion request to " + endpoint_ + kCompletePath +
                       " failed after " +
                       std::to_string(options_.max_retries + 1) +
                       " attempts: " + last_error);
}

CorrectionResult correct_remote(const CorrectionContext& ctx,
                                const CompletionClient& client) {
  CorrectionResult result;
  result.backend = CorrectorBackend::kRemote;
  result.corrected = client.complete(render_context(ctx));
  return result;
}

std::vector<TokenSpan> RemoteTagger::tag(std::string_view hypothesis) const {
  const std::string prompt = "[T] " + std::string(hypothesis) + " [P]";
  const std::string completion = client_.complete(prompt);
  std::string diagnostic;
  std::vector<TokenSpan> spans =
      parse_bracketed_spans(completion, hypothesis, &diagnostic);
  last_diagnostic_ = diagnostic;
  return spans;
}

}  // namespace entfix
