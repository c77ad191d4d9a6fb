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
#include <span>
#include <string>
#include <vector>

#include "entfix/bm25.hpp"
#include "entfix/embedding.hpp"
#include "entfix/query.hpp"

namespace entfix {

class EntityCatalog;

/// One retrieval hit. Results are always sorted by ascending distance with
/// ties broken by ascending entity id. Dense hits carry true Euclidean
/// distances; sparse (BM25) hits carry the pseudo-distance 1/(1+score) so
/// both retrievers share one contract. `from_sparse` marks the latter,
/// because the D_max Euclidean threshold does not apply to them.
struct RetrievedEntity {
  std::uint64_t entity_id = 0;
  double distance = 0.0;
  Query source_query;
  bool from_sparse = false;
};

/// Dense key matrix over a catalog: row i holds encode_dense of entity i's
/// normalized form, stored single precision; distances are computed in
/// double. Immutable after build; concurrent queries are safe.
///
/// On-disk format: "ANIX" magic, u32 version, u64 row count, u32 dim (40),
/// then row-major little-endian f32 keys, then one u64 id per row.
/// Round-trips bit-exact.
class EmbeddingIndex {
 public:
  static constexpr std::uint32_t kFormatVersion = 1;

  /// One key per entity via encode_dense; deterministic. Throws ConfigError
  /// on an empty catalog.
  static EmbeddingIndex build(const EntityCatalog& catalog);

  /// Exact k-nearest-neighbor search: the <= k entities closest to
  /// `query_vec` among those with distance <= d_max, ascending, ties by
  /// entity id. Brute-force scan, no approximation. An empty result is
  /// valid.
  std::vector<RetrievedEntity> knn(const DenseEmbedding& query_vec,
                                   std::size_t k, double d_max) const;

  void save(const std::string& path) const;
  static EmbeddingIndex load(const std::string& path);

  std::size_t rows() const { return ids_.size(); }
  std::span<const float> key(std::size_t row) const;
  std::uint64_t id_at(std::size_t row) const { return ids_[row]; }

 private:
  std::vector<float> keys_;  // rows() x kEmbeddingDim, row-major
  std::vector<std::uint64_t> ids_;
};

/// BM25 as a retriever: top-k by descending score, zero-score entities
/// excluded, scores mapped to pseudo-distance 1/(1+score). D_max is not
/// applied (it is a Euclidean threshold; see RetrievedEntity).
std::vector<RetrievedEntity> bm25_topk(const Bm25Index& index,
                                       const Query& query, std::size_t k);

/// Common retrieval contract for the pipeline and the recall evaluation.
class Retriever {
 public:
  virtual ~Retriever() = default;
  virtual std::vector<RetrievedEntity> retrieve(const Query& query,
                                                std::size_t k,
                                                double d_max) const = 0;
};

class DenseRetriever final : public Retriever {
 public:
  explicit DenseRetriever(const EmbeddingIndex& index) : index_(index) {}
  std::vector<RetrievedEntity> retrieve(const Query& query, std::size_t k,
                                        double d_max) const override;

 private:
  const EmbeddingIndex& index_;
};

class SparseRetriever final : public Retriever {
 public:
  explicit SparseRetriever(const Bm25Index& index) : index_(index) {}
  std::vector<RetrievedEntity> retrieve(const Query& query, std::size_t k,
                                        double d_max) const override;

 private:
  const Bm25Index& index_;
};

}  // namespace entfix
