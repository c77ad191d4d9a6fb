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

#include "entfix/corrector.hpp"

#include <algorithm>

#include "entfix/embedding.hpp"
#include "entfix/text.hpp"

namespace entfix {

CorrectionResult correct_reference(const CorrectionContext& ctx,
                                   const SubstitutionPolicy& policy) {
  CorrectionResult result;
  result.backend = CorrectorBackend::kReference;

  const std::vector<std::string> tokens = tokenize(ctx.hypothesis);

  // Hints arrive sorted by ascending distance; overlaps resolve greedily in
  // favor of the most acoustically similar hint.
  struct Applied {
    TokenSpan span;
    const Hint* hint;
  };
  std::vector<Applied> applied;
  for (const Hint& hint : ctx.hints) {
    const TokenSpan span = hint.source_query.span;
    if (span.begin >= span.end || span.end > tokens.size()) continue;
    const std::string span_text = join_tokens(tokens, span.begin, span.end);
    if (policy.require_improvement && hint.entity.normalized == span_text) {
      continue;
    }
    const bool overlap =
        std::any_of(applied.begin(), applied.end(), [&span](const Applied& a) {
          return a.span.overlaps(span);
        });
    if (overlap) continue;
    const double s = euclidean_distance(encode_dense(span_text),
                                        encode_dense(hint.entity.normalized));
    if (s > policy.d_sub) continue;
    applied.push_back(Applied{span, &hint});
  }

  if (applied.empty()) {
    result.corrected = ctx.hypothesis;
    return result;
  }

  std::sort(applied.begin(), applied.end(),
            [](const Applied& a, const Applied& b) {
              return a.span.begin < b.span.begin;
            });

  // Rebuild the hypothesis left to right; the output stays normalized, the
  // display surface form travels in the substitution record.
  std::string corrected;
  std::size_t at = 0;
  for (const Applied& a : applied) {
    for (; at < a.span.begin; ++at) {
      if (!corrected.empty()) corrected.push_back(' ');
      corrected += tokens[at];
    }
    if (!corrected.empty()) corrected.push_back(' ');
    corrected += a.hint->entity.normalized;
    at = a.span.end;

    Substitution sub;
    sub.span = a.span;
    sub.replaced_text = a.hint->entity.surface;
    sub.entity_id = a.hint->entity.id;
    result.substitutions.push_back(std::move(sub));
  }
  for (; at < tokens.size(); ++at) {
    if (!corrected.empty()) corrected.push_back(' ');
    corrected += tokens[at];
  }
  result.corrected = std::move(corrected);
  return result;
}

}  // namespace entfix
