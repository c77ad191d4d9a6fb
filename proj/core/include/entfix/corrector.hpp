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

#include <cstdint>
#include <string>
#include <vector>

#include "entfix/context.hpp"
#include "entfix/query.hpp"

namespace entfix {

/// Gate for the deterministic substitutor: a hint may replace its source
/// span only when the encoder distance between span text and entity is at
/// most d_sub. Substitution should be stricter than retrieval, so
/// 0 < d_sub <= D_max.
struct SubstitutionPolicy {
  double d_sub = 0.9;
  bool require_improvement = true;
};

enum class CorrectorBackend { kReference, kRemote };

/// One applied substitution. `span` indexes the input hypothesis tokens;
/// `replaced_text` is the display surface form that went in.
struct Substitution {
  TokenSpan span;
  std::string replaced_text;
  std::uint64_t entity_id = 0;
};

struct CorrectionResult {
  std::string corrected;
  std::vector<Substitution> substitutions;
  CorrectorBackend backend = CorrectorBackend::kReference;
};

/// Deterministic aligner-substitutor. Hints are taken in ascending-distance
/// order; a hint replaces its source span with the entity's normalized form
/// when the encoder distance between span text and entity is within
/// policy.d_sub, the span does not overlap an earlier substitution, and the
/// entity actually differs from the span text (require_improvement). With
/// no applicable hints the output is byte-equal to the hypothesis.
CorrectionResult correct_reference(const CorrectionContext& ctx,
                                   const SubstitutionPolicy& policy = {});

}  // namespace entfix
