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

#include <cstddef>
#include <string>

namespace entfix {

/// Half-open token interval [begin, end) over a whitespace-tokenized
/// hypothesis.
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - begin; }
  bool overlaps(const TokenSpan& other) const {
    return begin < other.end && other.begin < end;
  }
  friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
};

enum class QueryStrategy { kAllNgrams, kTemplateMatch, kNeTag };

const char* to_string(QueryStrategy s);

/// A retrieval query: a text span of the hypothesis plus the strategy that
/// proposed it. `text` always equals the join of the hypothesis tokens in
/// `span`.
struct Query {
  std::string text;
  TokenSpan span;
  QueryStrategy strategy = QueryStrategy::kAllNgrams;

  friend bool operator==(const Query&, const Query&) = default;
};

}  // namespace entfix
