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

#include "jobstd/text.h"

namespace jobstd {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool InRange(char32_t cp, char32_t lo, char32_t hi) {
  return cp >= lo && cp <= hi;
}

}  // namespace

char32_t DecodeUtf8(std::string_view text, size_t &pos) {
  const auto byte = [&](size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  unsigned char lead = byte(pos);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  int extra = 0;
  char32_t cp = 0;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    ++pos;
    return kReplacement;
  }
  if (pos + extra >= text.size()) {
    ++pos;
    return kReplacement;
  }
  for (int i = 1; i <= extra; ++i) {
    unsigned char c = byte(pos + i);
    if ((c & 0xC0) != 0x80) {
      ++pos;
      return kReplacement;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  // Reject overlong forms and surrogates.
  static constexpr char32_t kMin[] = {0, 0x80, 0x800, 0x10000};
  if (cp < kMin[extra] || cp > 0x10FFFF || InRange(cp, 0xD800, 0xDFFF)) {
    ++pos;
    return kReplacement;
  }
  pos += extra + 1;
  return cp;
}

void AppendUtf8(char32_t cp, std::string &out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool IsTokenCodePoint(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
           (cp >= 'A' && cp <= 'Z');
  }
  // Latin-1 controls, punctuation and symbols.
  if (InRange(cp, 0x80, 0xBF) || cp == 0xD7 || cp == 0xF7) return false;
  // General punctuation, currency, arrows through misc symbols, CJK
  // punctuation, fullwidth ASCII punctuation, specials and emoji.
  if (InRange(cp, 0x2000, 0x206F) || InRange(cp, 0x20A0, 0x20CF) ||
      InRange(cp, 0x2190, 0x2BFF) || InRange(cp, 0x2E00, 0x2E7F) ||
      InRange(cp, 0x3000, 0x303F) || InRange(cp, 0xFE00, 0xFE0F) ||
      InRange(cp, 0xFE30, 0xFE4F) || InRange(cp, 0xFF00, 0xFF0F) ||
      InRange(cp, 0xFF1A, 0xFF20) || InRange(cp, 0xFFF0, 0xFFFF) ||
      InRange(cp, 0x1F000, 0x1FAFF)) {
    return false;
  }
  return true;
}

char32_t FoldCodePoint(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp < 0xC0) return cp;
  if (InRange(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 0x20;
  if (InRange(cp, 0x100, 0x137) || InRange(cp, 0x14A, 0x177)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (InRange(cp, 0x139, 0x148) || InRange(cp, 0x179, 0x17E)) {
    return (cp % 2 == 1) ? cp + 1 : cp;
  }
  if (cp == 0x178) return 0xFF;
  if (InRange(cp, 0x391, 0x3A9) && cp != 0x3A2) return cp + 0x20;
  if (InRange(cp, 0x410, 0x42F)) return cp + 0x20;
  if (InRange(cp, 0x400, 0x40F)) return cp + 0x50;
  return cp;
}

NormalizedText Normalize(std::string_view text) {
  NormalizedText out;
  size_t pos = 0;
  std::string current;
  size_t start = 0;
  bool in_token = false;
  while (pos < text.size()) {
    size_t at = pos;
    char32_t cp = DecodeUtf8(text, pos);
    if (IsTokenCodePoint(cp)) {
      if (!in_token) {
        in_token = true;
        start = at;
        current.clear();
      }
      AppendUtf8(FoldCodePoint(cp), current);
    } else if (in_token) {
      out.tokens.push_back(current);
      out.spans.push_back({start, at});
      in_token = false;
    }
  }
  if (in_token) {
    out.tokens.push_back(current);
    out.spans.push_back({start, text.size()});
  }
  return out;
}

std::string NormalizeKey(std::string_view text) {
  NormalizedText normalized = Normalize(text);
  std::string key;
  for (size_t i = 0; i < normalized.tokens.size(); ++i) {
    if (i > 0) key.push_back(' ');
    key += normalized.tokens[i];
  }
  return key;
}

std::string CaseFold(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    size_t at = pos;
    char32_t cp = DecodeUtf8(text, pos);
    if (cp == kReplacement && pos == at + 1 &&
        static_cast<unsigned char>(text[at]) >= 0x80) {
      out.push_back(text[at]);
      continue;
    }
    AppendUtf8(FoldCodePoint(cp), out);
  }
  return out;
}

}  // namespace jobstd
