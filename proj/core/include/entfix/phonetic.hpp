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

#include <string>
#include <string_view>

namespace entfix {

// Rule-based grapheme-to-phonetic-code mapping in the metaphone family.
// Each code is one character; words are separated by a single space. The
// scheme collapses doubled letters, merges voiced/unvoiced consonant pairs
// into shared classes, drops non-initial vowels and silences the usual
// English mute clusters, so that common homophone spellings ("night"/"nite",
// "through"/"thru") produce identical code sequences.
//
// Code alphabet:
//   A  any word-initial vowel        P  b p          T  d t
//   K  hard c, g, k, q               S  s z x-part soft-c
//   F  f v ph                        D  th           X  sh ch
//   J  j soft-g                      L  l            R  r
//   M  m                             N  n            W  w
//   Y  word-initial consonantal y    H  word-initial h
//   0-9  digits, kept verbatim
//
// Context rules: initial kn/gn/pn drop the first letter; initial wr -> R;
// gh is silent unless word-initial (-> K); g before n is silent; c is S
// before e/i/y else K; g is J before e/i/y else K; w is silent unless
// word-initial or followed by a vowel; h is silent unless word-initial;
// non-initial vowels and y are dropped; x expands to KS (initial x -> S).

/// Phonetic code sequence for one normalized token (no spaces). Apostrophes
/// and hyphens inside the token are transparent. Returns the empty string
/// when the token has no letters or digits.
std::string phonetic_codes_token(std::string_view token);

/// Codes for a whole normalized string: per-token code sequences joined by
/// single spaces. Throws ConfigError when no token yields any code (input
/// without letters or digits).
std::string phonetic_codes(std::string_view normalized_text);

/// Levenshtein distance over code characters (spaces are compared like any
/// other position). Used by tests and the corruption-sanity checks.
std::size_t code_edit_distance(std::string_view a, std::string_view b);

}  // namespace entfix
