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

#include <iosfwd>
#include <memory>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "entfix/query.hpp"

namespace entfix {

/// Every contiguous token span of length 1..min(n_max, token count), ordered
/// by start position then length. The count obeys
/// sum_{n=1..min(n_max,L)} (L - n + 1). Empty hypothesis gives no queries.
std::vector<Query> all_ngrams(std::string_view hypothesis, std::size_t n_max);

/// Ordered set of hand-curated regular expressions, one capture group each,
/// that extract likely entity regions (e.g. `^play (.*)$`).
///
/// File format: UTF-8 text, one ECMAScript pattern per line, `#` comments.
/// Patterns are used exactly as written -- no implicit anchoring. A pattern
/// that fails to compile or does not have exactly one capture group is
/// rejected at load.
class TemplateSet {
 public:
  static TemplateSet from_patterns(const std::vector<std::string>& patterns);
  static TemplateSet load(std::istream& in);
  static TemplateSet load_file(const std::string& path);

  std::size_t size() const { return entries_.size(); }
  const std::vector<std::string>& patterns() const { return sources_; }
  const std::vector<std::regex>& compiled() const { return entries_; }

 private:
  std::vector<std::string> sources_;
  std::vector<std::regex> entries_;
};

/// Applies each template in order; the first match of each emits its capture
/// group as one query. Character spans that cut through a token are expanded
/// outward to the covering token span; duplicate (text, span) pairs are
/// dropped; empty captures are ignored.
std::vector<Query> template_match(std::string_view hypothesis,
                                  const TemplateSet& templates);

/// Contract for named-entity region taggers: maps a hypothesis to token
/// spans likely to contain entity names. Implementations must tolerate
/// concurrent calls.
class NeTagger {
 public:
  virtual ~NeTagger() = default;
  virtual std::vector<TokenSpan> tag(std::string_view hypothesis) const = 0;
};

/// Reference tagger backed by template matching.
class TemplateTagger final : public NeTagger {
 public:
  explicit TemplateTagger(TemplateSet templates)
      : templates_(std::move(templates)) {}
  std::vector<TokenSpan> tag(std::string_view hypothesis) const override;

 private:
  TemplateSet templates_;
};

/// Delegates span finding to the tagger and wraps each span as a kNeTag
/// query.
std::vector<Query> ne_tag(std::string_view hypothesis, const NeTagger& tagger);

/// Parses a tagger completion that marks entity regions with square
/// brackets, e.g. "play [ the weekend ]" -> span [1,3). Brackets may also be
/// attached to words. On unbalanced brackets, or when the unbracketed token
/// stream does not match the hypothesis, returns an empty list and sets
/// `diagnostic`.
std::vector<TokenSpan> parse_bracketed_spans(std::string_view completion,
                                             std::string_view hypothesis,
                                             std::string* diagnostic);

}  // namespace entfix
