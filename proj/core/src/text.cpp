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

#include "entfix/text.hpp"

#include <cctype>
#include <cstdint>

namespace entfix {

namespace {

// One decoded unit of the input: either a Unicode scalar value or a single
// byte from an invalid UTF-8 sequence (kept opaque so normalize_text never
// fails on binary junk).
struct Unit {
  std::uint32_t cp = 0;
  bool opaque = false;  // invalid UTF-8 byte, passed through verbatim
};

std::vector<Unit> decode_utf8(std::string_view s) {
  std::vector<Unit> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char b0 = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 >> 5) == 0x6) {
      len = 2;
      cp = b0 & 0x1f;
    } else if ((b0 >> 4) == 0xe) {
      len = 3;
      cp = b0 & 0x0f;
    } else if ((b0 >> 3) == 0x1e) {
      len = 4;
      cp = b0 & 0x07;
    }
    bool ok = len > 0 && i + len <= s.size();
    for (std::size_t k = 1; ok && k < len; ++k) {
      const unsigned char bk = static_cast<unsigned char>(s[i + k]);
      if ((bk >> 6) != 0x2) {
        ok = false;
      } else {
        cp = (cp << 6) | (bk & 0x3f);
      }
    }
    if (ok && len == 2 && cp < 0x80) ok = false;
    if (ok && len == 3 && cp < 0x800) ok = false;
    if (ok && len == 4 && cp < 0x10000) ok = false;
    if (ok && (cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff))) ok = false;
    if (ok) {
      out.push_back({cp, false});
      i += len;
    } else {
      out.push_back({b0, true});
      i += 1;
    }
  }
  return out;
}

void encode_utf8(std::uint32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
}

bool is_space_cp(std::uint32_t cp) {
  switch (cp) {
    case 0x09: case 0x0a: case 0x0b: case 0x0c: case 0x0d: case 0x20:
    case 0x85: case 0xa0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202f: case 0x205f: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200a;
  }
}

bool is_ascii_punct(std::uint32_t cp) {
  return cp < 0x80 && std::ispunct(static_cast<int>(cp)) != 0;
}

// Unicode punctuation stripped outright (beyond the quote/dash remappings).
// General Punctuation plus the common Latin-1 marks; other non-ASCII
// codepoints are treated as letters.
bool is_unicode_punct(std::uint32_t cp) {
  if (cp >= 0x2000 && cp <= 0x206f) return true;
  switch (cp) {
    case 0xa1: case 0xa6: case 0xa7: case 0xab: case 0xb6: case 0xb7:
    case 0xbb: case 0xbf:
      return true;
    default:
      return false;
  }
}

// Post-remap item classes for the keep/drop pass.
enum class Kind : unsigned char { kAlnum, kSpace, kConditional, kDrop };

}  // namespace

std::string normalize_text(std::string_view raw) {
  const std::vector<Unit> units = decode_utf8(raw);

  struct Item {
    std::uint32_t cp;
    bool opaque;
    Kind kind;
  };
  std::vector<Item> items;
  items.reserve(units.size());

  for (const Unit& u : units) {
    std::uint32_t cp = u.cp;
    if (u.opaque) {
      items.push_back({cp, true, Kind::kAlnum});
      continue;
    }
    // Remap curly quotes and dash variants to their ASCII forms so the
    // apostrophe/hyphen retention rule below applies uniformly.
    if (cp == 0x2018 || cp == 0x2019 || cp == 0x02bc) cp = '\'';
    if ((cp >= 0x2010 && cp <= 0x2015) || cp == 0x2212) cp = '-';

    if (is_space_cp(cp)) {
      items.push_back({' ', false, Kind::kSpace});
    } else if (cp == '\'' || cp == '-') {
      items.push_back({cp, false, Kind::kConditional});
    } else if (is_ascii_punct(cp) || is_unicode_punct(cp)) {
      items.push_back({cp, false, Kind::kDrop});
    } else {
      if (cp >= 'A' && cp <= 'Z') cp += 'a' - 'A';
      items.push_back({cp, false, Kind::kAlnum});
    }
  }

  // Apostrophes and hyphens survive only next to an alphanumeric character;
  // adjacency skips dropped punctuation but not spaces.
  auto neighbor_alnum = [&items](std::size_t at, int step) {
    std::size_t i = at;
    while (true) {
      if (step < 0 && i == 0) return false;
      i = (step < 0) ? i - 1 : i + 1;
      if (i >= items.size()) return false;
      if (items[i].kind == Kind::kDrop) continue;
      return items[i].kind == Kind::kAlnum;
    }
  };

  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Item& it = items[i];
    bool emit = false;
    switch (it.kind) {
      case Kind::kAlnum:
        emit = true;
        break;
      case Kind::kConditional:
        emit = neighbor_alnum(i, -1) || neighbor_alnum(i, +1);
        break;
      case Kind::kSpace:
        if (!out.empty()) pending_space = true;
        break;
      case Kind::kDrop:
        break;
    }
    if (emit) {
      if (pending_space) {
        out.push_back(' ');
        pending_space = false;
      }
      if (it.opaque) {
        out.push_back(static_cast<char>(it.cp));
      } else {
        encode_utf8(it.cp, out);
      }
    }
  }
  return out;
}

bool is_normalized(std::string_view s) { return normalize_text(s) == s; }

std::vector<std::string> tokenize(std::string_view normalized) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < normalized.size()) {
    if (normalized[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t j = normalized.find(' ', i);
    if (j == std::string_view::npos) j = normalized.size();
    tokens.emplace_back(normalized.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  return join_tokens(tokens, 0, tokens.size());
}

std::string join_tokens(const std::vector<std::string>& tokens,
                        std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end && i < tokens.size(); ++i) {
    if (!out.empty()) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

bool is_valid_utf8(std::string_view line) {
  for (const Unit& u : decode_utf8(line)) {
    if (u.opaque) return false;
  }
  return true;
}

}  // namespace entfix
