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

#include "entfix/retrieval.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "entfix/catalog.hpp"
#include "entfix/errors.hpp"

namespace entfix {

namespace {

static_assert(std::endian::native == std::endian::little,
              "index persistence assumes a little-endian host");

constexpr char kMagic[4] = {'A', 'N', 'I', 'X'};

template <typename T>
void write_pod(std::ofstream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
void read_pod(std::ifstream& in, T& value, const std::string& path) {
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw IngestError("truncated index file: " + path);
}

}  // namespace

EmbeddingIndex EmbeddingIndex::build(const EntityCatalog& catalog) {
  if (catalog.empty()) {
    throw ConfigError("embedding index: empty catalog");
  }
  EmbeddingIndex index;
  index.keys_.reserve(catalog.size() * kEmbeddingDim);
  index.ids_.reserve(catalog.size());
  for (const Entity& entity : catalog.entities()) {
    const DenseEmbedding e = encode_dense(entity.normalized);
    for (double v : e.values) {
      index.keys_.push_back(static_cast<float>(v));
    }
    index.ids_.push_back(entity.id);
  }
  return index;
}

std::span<const float> EmbeddingIndex::key(std::size_t row) const {
  return std::span<const float>(keys_.data() + row * kEmbeddingDim,
                                kEmbeddingDim);
}

std::vector<RetrievedEntity> EmbeddingIndex::knn(
    const DenseEmbedding& query_vec, std::size_t k, double d_max) const {
  struct Hit {
    double dist2;
    std::uint64_t id;
  };
  const double d_max2 = d_max * d_max;

  // Full scan; a bounded sorted buffer of k best keeps selection exact.
  std::vector<Hit> best;
  best.reserve(k + 1);
  auto worse = [](const Hit& a, const Hit& b) {
    if (a.dist2 != b.dist2) return a.dist2 < b.dist2;
    return a.id < b.id;
  };

  for (std::size_t row = 0; row < rows(); ++row) {
    const float* key_row = keys_.data() + row * kEmbeddingDim;
    double dist2 = 0.0;
    for (std::size_t d = 0; d < kEmbeddingDim; ++d) {
      const double diff = query_vec.values[d] - static_cast<double>(key_row[d]);
      dist2 += diff * diff;
    }
    if (dist2 > d_max2) continue;
    const Hit hit{dist2, ids_[row]};
    if (best.size() == k && !worse(hit, best.back())) continue;
    auto pos = std::lower_bound(best.begin(), best.end(), hit, worse);
    best.insert(pos, hit);
    if (best.size() > k) best.pop_back();
  }

  std::vector<RetrievedEntity> out;
  out.reserve(best.size());
  for (const Hit& h : best) {
    RetrievedEntity r;
    r.entity_id = h.id;
    r.distance = std::sqrt(h.dist2);
    out.push_back(std::move(r));
  }
  return out;
}

void EmbeddingIndex::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IngestError("cannot write index file: " + path);
  out.write(kMagic, sizeof(kMagic));
  write_pod(out, kFormatVersion);
  write_pod(out, static_cast<std::uint64_t>(rows()));
  write_pod(out, static_cast<std::uint32_t>(kEmbeddingDim));
  out.write(reinterpret_cast<const char*>(keys_.data()),
            static_cast<std::streamsize>(keys_.size() * sizeof(float)));
  out.write(reinterpret_cast<const char*>(ids_.data()),
            static_cast<std::streamsize>(ids_.size() * sizeof(std::uint64_t)));
  if (!out) throw IngestError("short write on index file: " + path);
}

EmbeddingIndex EmbeddingIndex::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open index file: " + path);

  char magic[4];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw IngestError("not an entity index file (bad magic): " + path);
  }
  std::uint32_t version = 0;
  read_pod(in, version, path);
  if (version != kFormatVersion) {
    throw IngestError("unsupported index version " + std::to_string(version) +
                      ": " + path);
  }
  std::uint64_t row_count = 0;
  std::uint32_t dim = 0;
  read_pod(in, row_count, path);
  read_pod(in, dim, path);
  if (dim != kEmbeddingDim) {
    throw IngestError("index dimension " + std::to_string(dim) +
                      " does not match build dimension " +
                      std::to_string(kEmbeddingDim) + ": " + path);
  }

  EmbeddingIndex index;
  index.keys_.resize(row_count * kEmbeddingDim);
  index.ids_.resize(row_count);
  in.read(reinterpret_cast<char*>(index.keys_.data()),
          static_cast<std::streamsize>(index.keys_.size() * sizeof(float)));
  in.read(reinterpret_cast<char*>(index.ids_.data()),
          static_cast<std::streamsize>(index.ids_.size() * sizeof(std::uint64_t)));
  if (!in) throw IngestError("truncated index file: " + path);
  return index;
}

std::vector<RetrievedEntity> bm25_topk(const Bm25Index& index,
                                       const Query& query, std::size_t k) {
  std::vector<RetrievedEntity> out;
  for (const auto& [id, score] : index.top_k(query.text, k)) {
    RetrievedEntity r;
    r.entity_id = id;
    r.distance = 1.0 / (1.0 + score);
    r.source_query = query;
    r.from_sparse = true;
    out.push_back(std::move(r));
  }
  // Descending score maps monotonically to ascending pseudo-distance, so
  // order is already correct.
  return out;
}

std::vector<RetrievedEntity> DenseRetriever::retrieve(const Query& query,
                                                      std::size_t k,
                                                      double d_max) const {
  std::vector<RetrievedEntity> hits =
      index_.knn(encode_dense(query.text), k, d_max);
  for (RetrievedEntity& hit : hits) {
    hit.source_query = query;
  }
  return hits;
}

std::vector<RetrievedEntity> SparseRetriever::retrieve(const Query& query,
                                                       std::size_t k,
                                                       double /*d_max*/) const {
  return bm25_topk(index_, query, k);
}

}  // namespace entfix
