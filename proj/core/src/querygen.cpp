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

#include "entfix/querygen.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "entfix/errors.hpp"
#include "entfix/text.hpp"

namespace entfix {

const char* to_string(QueryStrategy s) {
  switch (s) {
    case QueryStrategy::kAllNgrams:
      return "all_ngrams";
    case QueryStrategy::kTemplateMatch:
      return "template";
    case QueryStrategy::kNeTag:
      return "ne_tag";
  }
  return "unknown";
}

std::vector<Query> all_ngrams(std::string_view hypothesis, std::size_t n_max) {
  const std::vector<std::string> tokens = tokenize(hypothesis);
  const std::size_t len = tokens.size();
  std::vector<Query> queries;
  for (std::size_t start = 0; start < len; ++start) {
    const std::size_t longest = std::min(n_max, len - start);
    for (std::size_t n = 1; n <= longest; ++n) {
      Query q;
      q.span = TokenSpan{start, start + n};
      q.text = join_tokens(tokens, start, start + n);
      q.strategy = QueryStrategy::kAllNgrams;
      queries.push_back(std::move(q));
    }
  }
  return queries;
}

TemplateSet TemplateSet::from_patterns(const std::vector<std::string>& patterns) {
  TemplateSet set;
  for (const std::string& pattern : patterns) {
    std::regex re;
    try {
      re.assign(pattern, std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
      throw ConfigError("template '" + pattern + "' does not compile: " +
                        e.what());
    }
    if (re.mark_count() != 1) {
      throw ConfigError("template '" + pattern + "' must have exactly one "
                        "capture group, has " + std::to_string(re.mark_count()));
    }
    set.sources_.push_back(pattern);
    set.entries_.push_back(std::move(re));
  }
  return set;
}

TemplateSet TemplateSet::load(std::istream& in) {
  std::vector<std::string> patterns;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    patterns.push_back(line);
  }
  return from_patterns(patterns);
}

TemplateSet TemplateSet::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open template file: " + path);
  return load(in);
}

namespace {

// Character extent [begin_char, end_char) of each token inside the
// normalized hypothesis (tokens are separated by single spaces).
std::vector<std::pair<std::size_t, std::size_t>> token_extents(
    const std::vector<std::string>& tokens) {
  std::vector<std::pair<std::size_t, std::size_t>> extents;
  extents.reserve(tokens.size());
  std::size_t at = 0;
  for (const std::string& t : tokens) {
    extents.emplace_back(at, at + t.size());
    at += t.size() + 1;
  }
  return extents;
}

// Expands a character range to the covering token span.
TokenSpan covering_span(
    const std::vector<std::pair<std::size_t, std::size_t>>& extents,
    std::size_t char_begin, std::size_t char_end) {
  TokenSpan span;
  bool found = false;
  for (std::size_t i = 0; i < extents.size(); ++i) {
    const auto [tb, te] = extents[i];
    // Token i is covered when the ranges intersect.
    if (tb < char_end && char_begin < te) {
      if (!found) span.begin = i;
      span.end = i + 1;
      found = true;
    }
  }
  return found ? span : TokenSpan{0, 0};
}

}  // namespace

std::vector<Query> template_match(std::string_view hypothesis,
                                  const TemplateSet& templates) {
  const std::vector<std::string> tokens = tokenize(hypothesis);
  if (tokens.empty()) return {};
  const auto extents = token_extents(tokens);
  const std::string hyp(hypothesis);

  std::vector<Query> queries;
  for (const std::regex& re : templates.compiled()) {
    std::smatch match;
    if (!std::regex_search(hyp, match, re)) continue;
    if (match.size() < 2 || !match[1].matched || match[1].length() == 0) {
      continue;
    }
    const std::size_t char_begin =
        static_cast<std::size_t>(match.position(1));
    const std::size_t char_end = char_begin +
        static_cast<std::size_t>(match.length(1));
    const TokenSpan span = covering_span(extents, char_begin, char_end);
    if (span.begin == span.end) continue;  // capture fell between tokens

    Query q;
    q.span = span;
    q.text = join_tokens(tokens, span.begin, span.end);
    q.strategy = QueryStrategy::kTemplateMatch;
    const bool duplicate =
        std::any_of(queries.begin(), queries.end(), [&q](const Query& seen) {
          return seen.span == q.span && seen.text == q.text;
        });
    if (!duplicate) queries.push_back(std::move(q));
  }
  return queries;
}

std::vector<TokenSpan> TemplateTagger::tag(std::string_view hypothesis) const {
  std::vector<TokenSpan> spans;
  for (const Query& q : template_match(hypothesis, templates_)) {
    spans.push_back(q.span);
  }
  return spans;
}

std::vector<Query> ne_tag(std::string_view hypothesis, const NeTagger& tagger) {
  const std::vector<std::string> tokens = tokenize(hypothesis);
  std::vector<Query> queries;
  for (const TokenSpan& span : tagger.tag(hypothesis)) {
    if (span.begin >= span.end || span.end > tokens.size()) continue;
    Query q;
    q.span = span;
    q.text = join_tokens(tokens, span.begin, span.end);
    q.strategy = QueryStrategy::kNeTag;
    queries.push_back(std::move(q));
  }
  return queries;
}

std::vector<TokenSpan> parse_bracketed_spans(std::string_view completion,
                                             std::string_view hypothesis,
                                             std::string* diagnostic) {
  // Lex: whitespace-separated, with '[' and ']' always standalone tokens.
  std::vector<std::string> lexed;
  std::string current;
  auto flush = [&]() {
    if (!current.empty()) {
      lexed.push_back(current);
      current.clear();
    }
  };
  for (char c : completion) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      flush();
    } else if (c == '[' || c == ']') {
      flush();
      lexed.emplace_back(1, c);
    } else {
      current.push_back(c);
    }
  }
  flush();

  const std::vector<std::string> hyp_tokens = tokenize(hypothesis);
  std::vector<TokenSpan> spans;
  std::size_t word_index = 0;
  bool open = false;
  std::size_t open_at = 0;
  std::size_t plain_words = 0;
  for (const std::string& tok : lexed) {
    if (tok == "[") {
      if (open) {
        if (diagnostic) *diagnostic = "nested or unbalanced '['";
        return {};
      }
      open = true;
      open_at = word_index;
    } else if (tok == "]") {
      if (!open) {
        if (diagnostic) *diagnostic = "']' without matching '['";
        return {};
      }
      open = false;
      if (word_index > open_at) {
        spans.push_back(TokenSpan{open_at, word_index});
      }
    } else {
      ++word_index;
      ++plain_words;
    }
  }
  if (open) {
    if (diagnostic) *diagnostic = "unclosed '['";
    return {};
  }
  if (plain_words != hyp_tokens.size()) {
    if (diagnostic) {
      *diagnostic = "completion word count " + std::to_string(plain_words) +
                    " does not match hypothesis token count " +
                    std::to_string(hyp_tokens.size());
    }
    return {};
  }
  return spans;
}

}  // namespace entfix
