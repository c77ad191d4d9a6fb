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
#include <string_view>
#include <unordered_map>
#include <vector>

namespace entfix {

class EntityCatalog;

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
};

/// Okapi BM25 over whitespace-tokenized normalized entity forms.
///
/// score(D, Q) = sum over query terms q of
///   IDF(q) * f(q,D) * (k1 + 1) / (f(q,D) + k1 * (1 - b + b * |D| / avgdl))
/// with IDF(q) = ln((N - n(q) + 0.5) / (n(q) + 0.5) + 1).
///
/// The +1 inside the log keeps IDF non-negative for very common terms, so
/// scores are always >= 0; terms absent from the corpus contribute nothing.
/// Immutable after build; safe for concurrent reads.
class Bm25Index {
 public:
  /// Builds the index. Throws ConfigError on an empty catalog.
  static Bm25Index build(const EntityCatalog& catalog, Bm25Params params = {});

  /// Scores one entity against a normalized query. Throws IngestError on an
  /// unknown entity id.
  double score(std::string_view normalized_query, std::uint64_t entity_id) const;

  /// (entity id, score) for every entity with score > 0, best first; ties
  /// broken by ascending entity id. k caps the result size.
  std::vector<std::pair<std::uint64_t, double>> top_k(
      std::string_view normalized_query, std::size_t k) const;

  std::size_t doc_count() const { return doc_lengths_.size(); }
  double avgdl() const { return avgdl_; }
  std::size_t doc_length(std::uint64_t entity_id) const;
  /// Document frequency n(term); 0 for out-of-corpus terms.
  std::size_t df(std::string_view term) const;
  const Bm25Params& params() const { return params_; }

 private:
  double idf(std::size_t df_term) const;

  Bm25Params params_;
  double avgdl_ = 0.0;
  std::vector<std::uint32_t> doc_lengths_;
  // term -> postings of (entity id, term frequency), ids ascending
  std::unordered_map<std::string, std::vector<std::pair<std::uint64_t, std::uint32_t>>>
      postings_;
};

}  // namespace entfix
