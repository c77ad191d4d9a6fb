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

#pragma once

#include <string>
#include <string_view>

#include "entfix/context.hpp"
#include "entfix/corrector.hpp"
#include "entfix/querygen.hpp"

namespace entfix {

// Completion wire protocol: HTTP POST to <endpoint>/v1/complete with JSON
// body {"context": "<rendered context>", "max_tokens": 1000, "greedy": true}
// and JSON response {"text": "<completion>"}, UTF-8, status 200 on success.
// Correction requests carry the `[H]/[A]/[P]` context; tagging requests wrap
// the hypothesis as `[T] <hypothesis> [P]` and expect it echoed back with
// square brackets around entity regions.

/// Minimal completion-service client. Each call opens its own connection,
/// so any number of concurrent requests is safe; transport failures and
/// non-success statuses are retried (max_retries, exponential backoff)
/// before surfacing as TransportError.
class CompletionClient {
 public:
  struct Options {
    double timeout_seconds = 30.0;
    int max_retries = 2;
    int backoff_initial_ms = 100;
    int max_tokens = 1000;
    bool greedy = true;
  };

  static constexpr const char* kCompletePath = "/v1/complete";

  /// `endpoint` is "http://host:port" (a bare "host:port" is accepted).
  explicit CompletionClient(std::string endpoint, Options options = {});

  /// Sends one completion request; returns the completion text. Throws
  /// TransportError on failure or on an empty completion.
  std::string complete(const std::string& context) const;

  const std::string& endpoint() const { return endpoint_; }
  const Options& options() const { return options_; }

 private:
  std::string endpoint_;
  Options options_;
};

/// Sends the rendered context to the completion service and returns the
/// completion verbatim as the corrected text. The remote model is a black
/// box, so the substitutions list stays empty.
CorrectionResult correct_remote(const CorrectionContext& ctx,
                                const CompletionClient& client);

/// Tagger backed by the completion service: spans come from bracket markers
/// in the completion. A malformed completion yields no spans (the
/// diagnostic is retrievable via last_diagnostic); transport failures
/// propagate as TransportError.
class RemoteTagger final : public NeTagger {
 public:
  explicit RemoteTagger(CompletionClient client) : client_(std::move(client)) {}

  std::vector<TokenSpan> tag(std::string_view hypothesis) const override;

  /// Diagnostic from the most recent malformed completion, empty otherwise.
  /// Only meaningful single-threaded; concurrent taggers should check the
  /// returned spans instead.
  const std::string& last_diagnostic() const { return last_diagnostic_; }

 private:
  CompletionClient client_;
  mutable std::string last_diagnostic_;
};

}  // namespace entfix
