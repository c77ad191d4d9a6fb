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

#include "entfix/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "entfix/errors.hpp"
#include "entfix/text.hpp"

namespace entfix {

namespace {

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

void EntityCatalog::append(std::string surface, double weight) {
  std::string normalized = normalize_text(surface);
  if (normalized.empty()) return;
  if (dedup_.count(normalized) != 0) return;  // first occurrence wins
  const std::uint64_t id = entities_.size();
  dedup_.emplace(normalized, id);
  entities_.push_back(Entity{id, std::move(surface), std::move(normalized), weight});
}

EntityCatalog EntityCatalog::load(std::istream& in) {
  struct TsvRow {
    std::uint64_t explicit_id;
    std::string surface;
    double weight;
  };

  EntityCatalog catalog;
  std::vector<TsvRow> tsv_rows;
  std::set<std::uint64_t> seen_ids;
  int mode = 0;  // 0 undecided, 1 plain lines, 2 TSV

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = strip_cr(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!is_valid_utf8(line)) {
      throw IngestError("catalog line " + std::to_string(line_no) +
                        ": malformed UTF-8");
    }
    const bool has_tab = line.find('\t') != std::string_view::npos;
    if (mode == 0) mode = has_tab ? 2 : 1;
    if ((mode == 2) != has_tab) {
      throw IngestError("catalog line " + std::to_string(line_no) +
                        ": mixed plain and TSV formats");
    }
    if (mode == 1) {
      catalog.append(std::string(line), 1.0);
      continue;
    }

    const std::size_t tab1 = line.find('\t');
    std::string_view id_field = line.substr(0, tab1);
    std::string_view rest = line.substr(tab1 + 1);
    std::uint64_t explicit_id = 0;
    auto [ptr, ec] = std::from_chars(id_field.data(),
                                     id_field.data() + id_field.size(),
                                     explicit_id);
    if (ec != std::errc() || ptr != id_field.data() + id_field.size()) {
      throw IngestError("catalog line " + std::to_string(line_no) +
                        ": bad id field '" + std::string(id_field) + "'");
    }
    if (!seen_ids.insert(explicit_id).second) {
      throw IngestError("catalog line " + std::to_string(line_no) +
                        ": duplicate explicit id " + std::to_string(explicit_id));
    }
    double weight = 1.0;
    const std::size_t tab2 = rest.find('\t');
    std::string_view surface = rest;
    if (tab2 != std::string_view::npos) {
      surface = rest.substr(0, tab2);
      std::string_view weight_field = rest.substr(tab2 + 1);
      try {
        weight = std::stod(std::string(weight_field));
      } catch (const std::exception&) {
        throw IngestError("catalog line " + std::to_string(line_no) +
                          ": bad weight field '" + std::string(weight_field) + "'");
      }
      if (!(weight > 0.0)) {
        throw IngestError("catalog line " + std::to_string(line_no) +
                          ": weight must be positive");
      }
    }
    tsv_rows.push_back(TsvRow{explicit_id, std::string(surface), weight});
  }

  if (mode == 2) {
    // Explicit ids fix the ingestion order; internal ids are then dense.
    std::sort(tsv_rows.begin(), tsv_rows.end(),
              [](const TsvRow& a, const TsvRow& b) {
                return a.explicit_id < b.explicit_id;
              });
    for (TsvRow& row : tsv_rows) {
      catalog.append(std::move(row.surface), row.weight);
    }
  }
  return catalog;
}

EntityCatalog EntityCatalog::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IngestError("cannot open catalog file: " + path);
  }
  return load(in);
}

EntityCatalog EntityCatalog::from_surfaces(const std::vector<std::string>& surfaces) {
  EntityCatalog catalog;
  for (const std::string& s : surfaces) {
    catalog.append(s, 1.0);
  }
  return catalog;
}

const Entity& EntityCatalog::at(std::uint64_t id) const {
  if (id >= entities_.size()) {
    throw IngestError("entity id out of range: " + std::to_string(id));
  }
  return entities_[id];
}

std::optional<std::uint64_t> EntityCatalog::find_normalized(
    std::string_view normalized) const {
  auto it = dedup_.find(std::string(normalized));
  if (it == dedup_.end()) return std::nullopt;
  return it->second;
}

}  // namespace entfix
