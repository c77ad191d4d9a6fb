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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entfix/catalog.hpp"
#include "entfix/query.hpp"
#include "entfix/retrieval.hpp"

namespace entfix {

/// One retrieved entity placed into the correction context. `include_query`
/// selects the hint-with-query serialization.
struct Hint {
  Entity entity;
  double distance = 0.0;
  Query source_query;
  bool include_query = false;
};

/// Filtered hints plus the hypothesis they should correct.
struct CorrectionContext {
  std::vector<Hint> hints;
  std::string hypothesis;
};

/// Two-threshold candidate filter: per source query, keep dense candidates
/// with distance <= d_max (sparse pseudo-distances are exempt from the
/// Euclidean threshold), truncate to r_max per query, then dedup entity ids
/// across queries keeping the minimum-distance occurrence. The result is
/// sorted by ascending distance, ties by entity id, and is idempotent under
/// re-filtering with the same parameters.
std::vector<RetrievedEntity> filter_candidates(
    std::span<const RetrievedEntity> candidates, double d_max,
    std::size_t r_max);

/// Builds the context for `hypothesis` from already-filtered candidates,
/// looking surface forms up in the catalog.
CorrectionContext make_context(std::span<const RetrievedEntity> filtered,
                               const EntityCatalog& catalog,
                               std::string_view hypothesis,
                               bool include_query);

/// Serializes the context:
///   entity-only:   `[H] <entity> [H] <entity> ... [A] <hypothesis> [P]`
///   entity+query:  `[H] <query> :: <entity> ... [A] <hypothesis> [P]`
/// Hints keep their filtered order; fields are separated by single spaces
/// and there is no trailing newline. With no hints the string starts at
/// `[A]`. Entity fields carry the display surface form.
std::string render_context(const CorrectionContext& ctx);

/// Structural view recovered from a rendered context string.
struct ParsedContext {
  struct ParsedHint {
    std::optional<std::string> query_text;
    std::string entity_text;
  };
  std::vector<ParsedHint> hints;
  std::string hypothesis;
};

/// Inverse of render_context, used to verify that the serialization is
/// lossless. Assumes hint and hypothesis text do not contain the reserved
/// `[H]`/`[A]`/`[P]` tags or the ` :: ` separator. Returns nullopt on
/// strings that do not follow the grammar.
std::optional<ParsedContext> parse_context(std::string_view rendered);

}  // namespace entfix
