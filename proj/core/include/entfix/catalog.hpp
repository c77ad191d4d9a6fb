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
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace entfix {

/// One catalog entry. Ids are dense, contiguous from 0, and stable for a
/// given input file; `normalized` is the retrieval key, `surface` the
/// display form.
struct Entity {
  std::uint64_t id = 0;
  std::string surface;
  std::string normalized;
  double weight = 1.0;  // optional sampling weight from the TSV column
};

/// Immutable catalog of named entities. Duplicate normalized forms are
/// dropped at ingestion (first occurrence wins); the catalog is read-only
/// after construction and safe for concurrent reads.
///
/// File format: UTF-8 text, one surface form per line, `#` starts a comment
/// line. Alternatively TSV `id<TAB>surface[<TAB>weight]` where the explicit
/// ids must be unique non-negative integers; they fix the ingestion order
/// and internal ids are reassigned densely from 0 in that order.
class EntityCatalog {
 public:
  EntityCatalog() = default;

  /// Builds a catalog from a line-oriented stream. Throws IngestError on
  /// malformed UTF-8 (naming the line number), on duplicate explicit TSV
  /// ids, or on unparseable TSV fields.
  static EntityCatalog load(std::istream& in);

  /// Convenience wrapper; throws IngestError when the file cannot be read.
  static EntityCatalog load_file(const std::string& path);

  /// Builds a catalog direct from surface forms (tests, synthetic data).
  static EntityCatalog from_surfaces(const std::vector<std::string>& surfaces);

  const Entity& at(std::uint64_t id) const;
  std::optional<std::uint64_t> find_normalized(std::string_view normalized) const;

  std::size_t size() const { return entities_.size(); }
  bool empty() const { return entities_.empty(); }
  const std::vector<Entity>& entities() const { return entities_; }

 private:
  void append(std::string surface, double weight);

  std::vector<Entity> entities_;
  std::unordered_map<std::string, std::uint64_t> dedup_;
};

}  // namespace entfix
