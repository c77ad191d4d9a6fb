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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace entfix {

/// Canonicalizes text so hypothesis spans and catalog keys compare
/// consistently:
///  - ASCII letters are lowercased; non-ASCII letters pass through unchanged.
///  - Curly quotes map to ASCII apostrophe, Unicode dashes to ASCII hyphen.
///  - Punctuation is removed, except apostrophes and hyphens that touch an
///    alphanumeric character ("guns n' roses" keeps its apostrophe).
///  - Whitespace (including common Unicode spaces) collapses to single
///    spaces; the result is trimmed.
///
/// Idempotent: normalize_text(normalize_text(s)) == normalize_text(s).
/// Never fails; the empty string is a valid result.
std::string normalize_text(std::string_view raw);

/// True when `s` is a fixpoint of normalize_text.
bool is_normalized(std::string_view s);

/// Splits a normalized string on single spaces. Empty input gives no tokens.
std::vector<std::string> tokenize(std::string_view normalized);

/// Joins tokens with single spaces.
std::string join_tokens(const std::vector<std::string>& tokens);

/// Joins the token range [begin, end).
std::string join_tokens(const std::vector<std::string>& tokens,
                        std::size_t begin, std::size_t end);

/// Validates that `line` is well-formed UTF-8.
bool is_valid_utf8(std::string_view line);

}  // namespace entfix
