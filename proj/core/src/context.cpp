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

#include "entfix/context.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace entfix {

namespace {

struct QueryKey {
  std::string text;
  TokenSpan span;
  QueryStrategy strategy;

  bool operator<(const QueryKey& other) const {
    if (text != other.text) return text < other.text;
    if (span.begin != other.span.begin) return span.begin < other.span.begin;
    if (span.end != other.span.end) return span.end < other.span.end;
    return static_cast<int>(strategy) < static_cast<int>(other.strategy);
  }
};

}  // namespace

std::vector<RetrievedEntity> filter_candidates(
    std::span<const RetrievedEntity> candidates, double d_max,
    std::size_t r_max) {
  // Group by source query, preserving first-seen group order.
  std::map<QueryKey, std::size_t> group_of;
  std::vector<std::vector<const RetrievedEntity*>> groups;
  for (const RetrievedEntity& c : candidates) {
    const QueryKey key{c.source_query.text, c.source_query.span,
                       c.source_query.strategy};
    auto [it, inserted] = group_of.emplace(key, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(&c);
  }

  // Threshold + per-query truncation, then cross-query dedup at minimum
  // distance.
  std::unordered_map<std::uint64_t, RetrievedEntity> best;
  for (const auto& group : groups) {
    std::size_t kept = 0;
    for (const RetrievedEntity* c : group) {
      if (kept == r_max) break;
      if (!c->from_sparse && c->distance > d_max) continue;
      ++kept;
      auto it = best.find(c->entity_id);
      if (it == best.end() || c->distance < it->second.distance) {
        best[c->entity_id] = *c;
      }
    }
  }

  std::vector<RetrievedEntity> out;
  out.reserve(best.size());
  for (const auto& [id, candidate] : best) out.push_back(candidate);
  std::sort(out.begin(), out.end(),
            [](const RetrievedEntity& a, const RetrievedEntity& b) {
              if (a.distance != b.distance) return a.distance < b.distance;
              return a.entity_id < b.entity_id;
            });
  return out;
}

CorrectionContext make_context(std::span<const RetrievedEntity> filtered,
                               const EntityCatalog& catalog,
                               std::string_view hypothesis,
                               bool include_query) {
  CorrectionContext ctx;
  ctx.hypothesis = std::string(hypothesis);
  ctx.hints.reserve(filtered.size());
  for (const RetrievedEntity& c : filtered) {
    Hint hint;
    hint.entity = catalog.at(c.entity_id);
    hint.distance = c.distance;
    hint.source_query = c.source_query;
    hint.include_query = include_query;
    ctx.hints.push_back(std::move(hint));
  }
  return ctx;
}

std::string render_context(const CorrectionContext& ctx) {
  std::string out;
  for (const Hint& hint : ctx.hints) {
    out += "[H] ";
    if (hint.include_query) {
      out += hint.source_query.text;
      out += " :: ";
    }
    out += hint.entity.surface;
    out += ' ';
  }
  out += "[A] ";
  out += ctx.hypothesis;
  out += " [P]";
  return out;
}

std::optional<ParsedContext> parse_context(std::string_view rendered) {
  ParsedContext parsed;
  std::string_view rest = rendered;

  while (rest.rfind("[H] ", 0) == 0) {
    rest.remove_prefix(4);
    const std::size_t next_h = rest.find(" [H] ");
    const std::size_t next_a = rest.find(" [A] ");
    if (next_a == std::string_view::npos) return std::nullopt;
    const std::size_t cut = std::min(next_h, next_a);
    std::string_view body = rest.substr(0, cut);
    if (body.empty()) return std::nullopt;

    ParsedContext::ParsedHint hint;
    const std::size_t sep = body.find(" :: ");
    if (sep != std::string_view::npos) {
      hint.query_text = std::string(body.substr(0, sep));
      hint.entity_text = std::string(body.substr(sep + 4));
      if (hint.query_text->empty() || hint.entity_text.empty()) {
        return std::nullopt;
      }
    } else {
      hint.entity_text = std::string(body);
    }
    parsed.hints.push_back(std::move(hint));
    rest.remove_prefix(cut + 1);  // consume body and the separating space
  }

  if (rest.rfind("[A] ", 0) != 0) return std::nullopt;
  rest.remove_prefix(4);
  if (rest.size() < 4 || rest.substr(rest.size() - 4) != " [P]") {
    return std::nullopt;
  }
  parsed.hypothesis = std::string(rest.substr(0, rest.size() - 4));
  if (parsed.hypothesis.empty()) return std::nullopt;
  return parsed;
}

}  // namespace entfix
