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

#include <gtest/gtest.h>

namespace jobstd {
namespace {

TEST(NormalizeTest, SplitsOnNonAlphanumericsAndFoldsCase) {
  NormalizedText n = Normalize("Senior  Back-End Engineer, NYC");
  EXPECT_EQ(n.tokens, (std::vector<std::string>{"senior", "back", "end",
                                                "engineer", "nyc"}));
  ASSERT_EQ(n.spans.size(), 5u);
  EXPECT_EQ(n.spans[1], (CharSpan{8, 12}));
  EXPECT_EQ(n.spans[4], (CharSpan{27, 30}));
}

TEST(NormalizeTest, EmptyAndSeparatorOnlyTextHaveNoTokens) {
  EXPECT_TRUE(Normalize("").empty());
  EXPECT_TRUE(Normalize(" ,.;-- ").empty());
}

TEST(NormalizeTest, SpansCoverOriginalBytes) {
  const std::string text = "Ünïcode Straße and SQL";
  NormalizedText n = Normalize(text);
  ASSERT_EQ(n.tokens.size(), 4u);
  for (size_t i = 0; i < n.tokens.size(); ++i) {
    EXPECT_EQ(CaseFold(text.substr(n.spans[i].begin, n.spans[i].size())),
              n.tokens[i]);
  }
  EXPECT_EQ(n.tokens[0], "ünïcode");
}

TEST(NormalizeKeyTest, JoinsTokensWithSingleSpaces) {
  EXPECT_EQ(NormalizeKey("  Machine   LEARNING!! "), "machine learning");
  EXPECT_EQ(NormalizeKey("Node.js"), "node js");
  EXPECT_EQ(NormalizeKey("***"), "");
}

TEST(Utf8Test, InvalidBytesDecodeAsReplacement) {
  std::string bad = "a\xff" "b";
  size_t pos = 1;
  EXPECT_EQ(DecodeUtf8(bad, pos), U'\uFFFD');
  EXPECT_EQ(pos, 2u);
  std::string truncated = "\xe2\x82";
  pos = 0;
  DecodeUtf8(truncated, pos);
  EXPECT_LE(pos, truncated.size());
}

TEST(Utf8Test, RoundTripsCodePoints) {
  for (char32_t cp : {U'a', U'é', U'€', U'𝄞'}) {
    std::string s;
    AppendUtf8(cp, s);
    size_t pos = 0;
    EXPECT_EQ(DecodeUtf8(s, pos), cp);
    EXPECT_EQ(pos, s.size());
  }
}

}  // namespace
}  // namespace jobstd
