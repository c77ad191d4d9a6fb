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
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entfix/catalog.hpp"
#include "entfix/query.hpp"

namespace entfix {

/// One evaluation utterance: a clean reference, a possibly corrupted
/// hypothesis, and the gold entity with its token span in the reference.
///
/// File format: JSON Lines, one object per line with fields
/// {"id", "reference", "hypothesis", "gold_entity_id"?, "gold_span"?: [b,e),
///  "corrupted"}.
struct EvalRecord {
  std::string id;
  std::string reference;
  std::string hypothesis;
  std::optional<std::uint64_t> gold_entity_id;
  std::optional<TokenSpan> gold_span;
  bool corrupted = false;
};

/// Textual stand-in for TTS + ASR: corrupts entity spans with acoustically
/// plausible edits. Weights must be positive and sum to 1.
struct CorruptionModel {
  double p_err = 0.5;
  struct Weights {
    double vowel_swap = 0.25;
    double double_letter = 0.20;
    double homophone = 0.20;
    double consonant_swap = 0.25;
    double split_merge = 0.10;
  } weights;
  std::uint64_t seed = 0;
  /// Extra confusion pairs (applied both directions) on top of the built-in
  /// homophone table.
  std::vector<std::pair<std::string, std::string>> extra_homophones;
};

/// Checks the weight invariant; throws ConfigError on violation.
void validate(const CorruptionModel& model);

/// Applies 1-2 sampled edit operations to `text`. The result differs from
/// the input and stays normalization-stable; after 10 failed attempts the
/// input comes back unchanged with *corrupted_out = false.
std::string corrupt_span(std::string_view text, const CorruptionModel& model,
                         std::mt19937_64& rng, bool* corrupted_out);

/// Instantiates `n` records from carrier templates (each contains exactly
/// one `{entity}` slot) and catalog entities, corrupting the entity span
/// with probability p_err. Fully reproducible from model.seed. Throws
/// ConfigError on a template without `{entity}`, an empty template list, an
/// empty catalog, or n == 0.
std::vector<EvalRecord> generate_records(const EntityCatalog& catalog,
                                         const std::vector<std::string>& templates,
                                         std::size_t n,
                                         const CorruptionModel& model);

void write_records(std::ostream& out, std::span<const EvalRecord> records);
void write_records_file(const std::string& path,
                        std::span<const EvalRecord> records);
std::vector<EvalRecord> read_records(std::istream& in);
std::vector<EvalRecord> read_records_file(const std::string& path);

/// Homophone lexicon: TSV `from<TAB>to`, `#` comments.
std::vector<std::pair<std::string, std::string>> load_homophone_lexicon(
    const std::string& path);

/// The built-in confusion table (normalized token -> respelling).
std::span<const std::pair<const char*, const char*>> builtin_homophones();

}  // namespace entfix
