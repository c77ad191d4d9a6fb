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

#include "entfix/embedding.hpp"

#include <cmath>
#include <string>

#include "entfix/errors.hpp"
#include "entfix/phonetic.hpp"
#include "entfix/text.hpp"

namespace entfix {

double DenseEmbedding::norm() const {
  double s = 0.0;
  for (double v : values) s += v * v;
  return std::sqrt(s);
}

double euclidean_distance(const DenseEmbedding& a, const DenseEmbedding& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < kEmbeddingDim; ++i) {
    const double d = a.values[i] - b.values[i];
    s += d * d;
  }
  return std::sqrt(s);
}

std::uint64_t feature_hash64(std::string_view feature) {
  std::uint64_t h = kFnvOffsetBasis ^ kFeatureHashSeed;
  for (char c : feature) {
    h ^= static_cast<unsigned char>(c);
    h *= kFnvPrime;
  }
  return h;
}

namespace {

void accumulate(std::string_view feature, double weight,
                std::array<double, kEmbeddingDim>& acc) {
  const std::uint64_t h = feature_hash64(feature);
  const double sign = (h >> 63) ? -1.0 : 1.0;
  acc[h % kEmbeddingDim] += sign * weight;
}

// n-grams of `s` for n in {lo..hi}, each tagged with `prefix` so the
// orthographic and phonetic namespaces never collide in the hash space.
void add_ngrams(std::string_view s, std::size_t lo, std::size_t hi,
                std::string_view prefix, double weight,
                std::array<double, kEmbeddingDim>& acc) {
  std::string feature;
  for (std::size_t n = lo; n <= hi; ++n) {
    if (s.size() < n) break;
    for (std::size_t i = 0; i + n <= s.size(); ++i) {
      feature.assign(prefix);
      feature.append(s.substr(i, n));
      accumulate(feature, weight, acc);
    }
  }
}

}  // namespace

DenseEmbedding encode_dense(std::string_view normalized_text) {
  if (normalized_text.empty()) {
    throw ConfigError("encode_dense: empty input");
  }

  std::array<double, kEmbeddingDim> acc{};
  bool any_feature = false;
  for (const std::string& token : tokenize(normalized_text)) {
    const std::string wrapped = "^" + token + "$";
    add_ngrams(wrapped, 2, 3, "o:", kOrthoFeatureWeight, acc);
    any_feature = true;

    const std::string codes = phonetic_codes_token(token);
    if (!codes.empty()) {
      add_ngrams(codes, 1, 1, "p:", kPhoneticFeatureWeight, acc);
      add_ngrams("^" + codes + "$", 2, 2, "p:", kPhoneticFeatureWeight, acc);
    }
  }
  if (!any_feature) {
    throw ConfigError("encode_dense: input has no tokens: '" +
                      std::string(normalized_text) + "'");
  }

  double norm = 0.0;
  for (double v : acc) norm += v * v;
  norm = std::sqrt(norm);
  if (norm == 0.0) {
    // Unreachable for real inputs: every token contributes features and
    // exact cancellation to zero would require colliding signed sums.
    throw ConfigError("encode_dense: zero feature vector");
  }

  DenseEmbedding e;
  for (std::size_t i = 0; i < kEmbeddingDim; ++i) {
    e.values[i] = acc[i] / norm;
  }
  return e;
}

}  // namespace entfix
