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

#include "entfix/bm25.hpp"

#include <algorithm>
#include <cmath>

#include "entfix/catalog.hpp"
#include "entfix/errors.hpp"
#include "entfix/text.hpp"

namespace entfix {

Bm25Index Bm25Index::build(const EntityCatalog& catalog, Bm25Params params) {
  if (catalog.empty()) {
    throw ConfigError("bm25: cannot build an index over an empty catalog");
  }
  Bm25Index index;
  index.params_ = params;
  index.doc_lengths_.reserve(catalog.size());

  std::size_t total_tokens = 0;
  std::unordered_map<std::string, std::uint32_t> freqs;
  for (const Entity& entity : catalog.entities()) {
    freqs.clear();
    const std::vector<std::string> tokens = tokenize(entity.normalized);
    for (const std::string& t : tokens) ++freqs[t];
    index.doc_lengths_.push_back(static_cast<std::uint32_t>(tokens.size()));
    total_tokens += tokens.size();
    for (const auto& [term, tf] : freqs) {
      index.postings_[term].emplace_back(entity.id, tf);
    }
  }
  index.avgdl_ = static_cast<double>(total_tokens) /
                 static_cast<double>(catalog.size());
  // Catalog iteration is id-ascending, so postings are already sorted.
  return index;
}

double Bm25Index::idf(std::size_t df_term) const {
  const double n = static_cast<double>(df_term);
  const double N = static_cast<double>(doc_count());
  return std::log((N - n + 0.5) / (n + 0.5) + 1.0);
}

std::size_t Bm25Index::doc_length(std::uint64_t entity_id) const {
  if (entity_id >= doc_lengths_.size()) {
    throw IngestError("bm25: unknown entity id " + std::to_string(entity_id));
  }
  return doc_lengths_[entity_id];
}

std::size_t Bm25Index::df(std::string_view term) const {
  auto it = postings_.find(std::string(term));
  return it == postings_.end() ? 0 : it->second.size();
}

double Bm25Index::score(std::string_view normalized_query,
                        std::uint64_t entity_id) const {
  const double dl = static_cast<double>(doc_length(entity_id));
  const double len_norm =
      params_.k1 * (1.0 - params_.b + params_.b * dl / avgdl_);

  double score = 0.0;
  for (const std::string& term : tokenize(normalized_query)) {
    auto it = postings_.find(term);
    if (it == postings_.end()) continue;
    const auto& plist = it->second;
    auto pos = std::lower_bound(
        plist.begin(), plist.end(), entity_id,
        [](const auto& entry, std::uint64_t id) { return entry.first < id; });
    if (pos == plist.end() || pos->first != entity_id) continue;
    const double tf = static_cast<double>(pos->second);
    score += idf(plist.size()) * tf * (params_.k1 + 1.0) / (tf + len_norm);
  }
  return score;
}

std::vector<std::pair<std::uint64_t, double>> Bm25Index::top_k(
    std::string_view normalized_query, std::size_t k) const {
  std::unordered_map<std::uint64_t, double> scores;
  for (const std::string& term : tokenize(normalized_query)) {
    auto it = postings_.find(term);
    if (it == postings_.end()) continue;
    const double term_idf = idf(it->second.size());
    for (const auto& [doc, tf] : it->second) {
      const double dl = static_cast<double>(doc_lengths_[doc]);
      const double len_norm =
          params_.k1 * (1.0 - params_.b + params_.b * dl / avgdl_);
      scores[doc] += term_idf * static_cast<double>(tf) * (params_.k1 + 1.0) /
                     (static_cast<double>(tf) + len_norm);
    }
  }

  std::vector<std::pair<std::uint64_t, double>> ranked;
  ranked.reserve(scores.size());
  for (const auto& [doc, s] : scores) {
    if (s > 0.0) ranked.emplace_back(doc, s);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

}  // namespace entfix
