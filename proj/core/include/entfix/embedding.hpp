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

#include <array>
#include <cstdint>
#include <string_view>

namespace entfix {

inline constexpr std::size_t kEmbeddingDim = 40;

/// Unit-norm 40-dimensional text embedding under Euclidean distance.
/// Acoustically confusable strings land close together; distances lie in
/// [0, 2] by the unit-norm invariant.
struct DenseEmbedding {
  std::array<double, kEmbeddingDim> values{};

  double norm() const;
};

/// Euclidean distance, accumulated in double precision.
double euclidean_distance(const DenseEmbedding& a, const DenseEmbedding& b);

// Feature hashing constants. FNV-1a 64-bit with the offset basis XORed with
// kFeatureHashSeed; the bucket is hash mod 40 and the sign comes from the
// top hash bit. Fixed here so embeddings are reproducible across platforms
// and runs.
inline constexpr std::uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;
inline constexpr std::uint64_t kFeatureHashSeed = 0x9e3779b97f4a7c15ull;

// Relative weight of phonetic-code features against orthographic character
// n-grams. Phonetic features carry the acoustic signal, so they get the
// larger share.
inline constexpr double kOrthoFeatureWeight = 1.0;
inline constexpr double kPhoneticFeatureWeight = 2.0;

/// Seeded FNV-1a over `feature`.
std::uint64_t feature_hash64(std::string_view feature);

/// Deterministic acoustic-proxy encoder: hashes the multiset of character
/// 2/3-grams (per token, with ^ $ boundary markers) and phonetic-code
/// 1/2-grams into 40 signed dimensions, then L2-normalizes. Equal inputs
/// give bitwise-equal outputs.
///
/// Throws ConfigError on input that is empty or has no letters/digits.
DenseEmbedding encode_dense(std::string_view normalized_text);

}  // namespace entfix
