// Copyright 2026 The jobstd Authors.
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

#ifndef JOBSTD_TEXT_H_
#define JOBSTD_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace jobstd {

// Half-open byte range [begin, end) into a UTF-8 string.
struct CharSpan {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool operator==(const CharSpan &) const = default;
};

// Tokenized text. Tokens are maximal runs of letters and digits, case-folded.
// Everything else separates tokens. Spans are byte offsets into the original
// text, so text.substr(span) case-folds to the token.
struct NormalizedText {
  std::vector<std::string> tokens;
  std::vector<CharSpan> spans;

  size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

NormalizedText Normalize(std::string_view text);

// Tokens joined with single spaces; the canonical key for aliases.
std::string NormalizeKey(std::string_view text);

// Case-folds a UTF-8 string without tokenizing. Invalid UTF-8 bytes are
// passed through unchanged.
std::string CaseFold(std::string_view text);

// True if the code point is part of a token (letter or digit).
bool IsTokenCodePoint(char32_t cp);
char32_t FoldCodePoint(char32_t cp);

// Decodes one code point starting at text[pos]; advances pos. An invalid or
// truncated sequence consumes one byte and decodes as U+FFFD.
char32_t DecodeUtf8(std::string_view text, size_t &pos);
void AppendUtf8(char32_t cp, std::string &out);

}  // namespace jobstd

#endif  // JOBSTD_TEXT_H_
