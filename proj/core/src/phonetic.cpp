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

#include "entfix/phonetic.hpp"

#include <algorithm>
#include <vector>

#include "entfix/errors.hpp"
#include "entfix/text.hpp"

namespace entfix {

namespace {

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool is_vowel_or_y(char c) { return is_vowel(c) || c == 'y'; }

// Keeps ASCII letters and digits, collapses immediate doubles.
std::string skeleton(std::string_view token) {
  std::string s;
  s.reserve(token.size());
  for (char c : token) {
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
      if (!s.empty() && s.back() == c) continue;
      s.push_back(c);
    }
  }
  return s;
}

}  // namespace

std::string phonetic_codes_token(std::string_view token) {
  const std::string s = skeleton(token);
  std::string out;
  out.reserve(s.size());

  auto at = [&s](std::size_t i) -> char {
    return i < s.size() ? s[i] : '\0';
  };
  auto push = [&out](char code) {
    if (out.empty() || out.back() != code) out.push_back(code);
  };

  std::size_t i = 0;
  // Word-initial special cases.
  if (s.size() >= 2) {
    std::string_view head = std::string_view(s).substr(0, 2);
    if (head == "kn" || head == "gn" || head == "pn") {
      i = 1;  // silent first letter
    } else if (head == "wr") {
      push('R');
      i = 2;
    } else if (head == "wh") {
      push('W');
      i = 2;
    } else if (head == "gh") {
      push('K');
      i = 2;
    }
  }
  if (i == 0 && at(0) == 'x') {
    push('S');
    i = 1;
  }

  for (; i < s.size(); ++i) {
    const char c = s[i];
    const char next = at(i + 1);
    const bool initial = out.empty() && i == 0;

    if (c >= '0' && c <= '9') {
      push(c);
      continue;
    }
    if (is_vowel(c)) {
      if (initial) push('A');
      continue;
    }
    switch (c) {
      case 'b':
      case 'p':
        if (c == 'p' && next == 'h') {
          push('F');
          ++i;
        } else {
          push('P');
        }
        break;
      case 'd':
        push('T');
        break;
      case 't':
        if (next == 'h') {
          push('D');
          ++i;
        } else {
          push('T');
        }
        break;
      case 'f':
      case 'v':
        push('F');
        break;
      case 'g':
        if (next == 'h') {
          ++i;  // silent: night, through, weight
        } else if (next == 'n') {
          // silent: sign, reign
        } else if (next == 'e' || next == 'i' || next == 'y') {
          push('J');
        } else {
          push('K');
        }
        break;
      case 'k':
      case 'q':
        push('K');
        break;
      case 'c':
        if (next == 'h') {
          push('X');
          ++i;
        } else if (next == 'k') {
          push('K');
          ++i;
        } else if (next == 'e' || next == 'i' || next == 'y') {
          push('S');
        } else {
          push('K');
        }
        break;
      case 's':
        if (next == 'h') {
          push('X');
          ++i;
        } else {
          push('S');
        }
        break;
      case 'z':
        push('S');
        break;
      case 'x':
        push('K');
        push('S');
        break;
      case 'j':
        push('J');
        break;
      case 'l':
        push('L');
        break;
      case 'r':
        push('R');
        break;
      case 'm':
        push('M');
        break;
      case 'n':
        push('N');
        break;
      case 'h':
        if (initial) push('H');
        break;
      case 'w':
        if (initial || is_vowel(next)) push('W');
        break;
      case 'y':
        if (initial) {
          // Consonantal before a vowel, vowel role otherwise ("y" -> A).
          if (is_vowel_or_y(next)) {
            push('Y');
          } else {
            push('A');
          }
        }
        break;
      default:
        break;
    }
  }
  return out;
}

std::string phonetic_codes(std::string_view normalized_text) {
  std::string out;
  for (const std::string& token : tokenize(normalized_text)) {
    const std::string codes = phonetic_codes_token(token);
    if (codes.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out += codes;
  }
  if (out.empty()) {
    throw ConfigError("phonetic_codes: input has no letters or digits: '" +
                      std::string(normalized_text) + "'");
  }
  return out;
}

std::size_t code_edit_distance(std::string_view a, std::string_view b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace entfix
