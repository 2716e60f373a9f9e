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

#include "jobstd/tagger.h"

#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.h"
#include "jobstd/error.h"
#include "jobstd/matcher.h"
#include "jobstd/rng.h"
#include "jobstd/synth.h"
#include "jobstd/text.h"
#include "oracles.h"

namespace jobstd {
namespace {

Taxonomy Parse(const std::string &jsonl) {
  std::istringstream in(jsonl);
  return ParseTaxonomy(in);
}

JobPosting Posting(std::string title, std::string description) {
  JobPosting p;
  p.posting_id = "p";
  p.raw_title = std::move(title);
  p.description = std::move(description);
  return p;
}

constexpr char kSkills[] =
    R"({"type": "skill", "id": "java", "name": "Java"}
{"type": "skill", "id": "javascript", "name": "JavaScript"}
{"type": "skill", "id": "spark", "name": "Spark", "aliases": ["Apache Spark"]}
{"type": "skill", "id": "ml", "name": "Machine Learning"}
{"type": "skill", "id": "mle", "name": "Machine Learning Engineer"}
)";

TEST(MatcherTest, PatternCountIsDistinctAliasCount) {
  Taxonomy t = Parse(
      R"({"type": "skill", "id": "a", "name": "Java", "aliases": ["Java SE"]}
{"type": "skill", "id": "b", "name": "Spark"})");
  EXPECT_EQ(Matcher::Build(t, EntityType::kSkill).pattern_count(), 3u);
}

TEST(MatcherTest, SharedAliasCompilesOnceAndReportsBothIds) {
  Taxonomy t = Parse(R"({"type": "skill", "id": "a", "name": "Java"}
{"type": "skill", "id": "b", "name": "Java Platform", "aliases": ["java"]})");
  Matcher m = Matcher::Build(t, EntityType::kSkill);
  EXPECT_EQ(m.pattern_count(), 2u);
  std::vector<EntityMention> mentions = Tag(m, Posting("x", "Java"));
  ASSERT_EQ(mentions.size(), 2u);
  EXPECT_EQ(mentions[0].entity_id, "a");
  EXPECT_EQ(mentions[1].entity_id, "b");
}

TEST(MatcherTest, EmptyTypeThrows) {
  Taxonomy t = Parse(kSkills);
  try {
    Matcher::Build(t, EntityType::kCompany);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyAliasSet);
  }
}

TEST(TagTest, FindsTwoSkills) {
  Taxonomy t = Parse(kSkills);
  Matcher m = Matcher::Build(t, EntityType::kSkill);
  std::vector<EntityMention> mentions =
      Tag(m, Posting("Engineer", "we need java and spark"));
  ASSERT_EQ(mentions.size(), 2u);
  EXPECT_EQ(mentions[0].entity_id, "java");
  EXPECT_EQ(mentions[0].char_span, (CharSpan{8, 12}));
  EXPECT_EQ(mentions[0].surface, "java");
  EXPECT_EQ(mentions[1].entity_id, "spark");
  EXPECT_EQ(mentions[1].start_token, 4u);
  EXPECT_EQ(mentions[1].end_token, 5u);
}

TEST(TagTest, MatchesWholeTokensOnly) {
  Taxonomy t = Parse(kSkills);
  Matcher m = Matcher::Build(t, EntityType::kSkill);
  std::vector<EntityMention> mentions = Tag(m, Posting("x", "JavaScript"));
  ASSERT_EQ(mentions.size(), 1u);
  EXPECT_EQ(mentions[0].entity_id, "javascript");
}

TEST(TagTest, KeepsOverlappingMentions) {
  Taxonomy t = Parse(kSkills);
  Matcher m = Matcher::Build(t, EntityType::kSkill);
  std::vector<EntityMention> mentions =
      Tag(m, Posting("Machine Learning Engineer", ""));
  ASSERT_EQ(mentions.size(), 2u);
  EXPECT_EQ(mentions[0].entity_id, "ml");
  EXPECT_EQ(mentions[1].entity_id, "mle");
  EXPECT_EQ(mentions[0].field, Field::kTitle);
}

TEST(TagTest, OrdersByFieldThenStartThenId) {
  Taxonomy t = Parse(kSkills);
  Matcher m = Matcher::Build(t, EntityType::kSkill);
  JobPosting p = Posting("Spark", "apache spark, Java");
  p.company_field = "Java";
  std::vector<EntityMention> mentions = Tag(m, p);
  // "apache spark" also contains the alias "spark".
  ASSERT_EQ(mentions.size(), 5u);
  EXPECT_EQ(mentions[0].field, Field::kTitle);
  EXPECT_EQ(mentions[1].field, Field::kDescription);
  EXPECT_EQ(mentions[1].surface, "apache spark");
  EXPECT_EQ(mentions[2].surface, "spark");
  EXPECT_EQ(mentions[3].entity_id, "java");
  EXPECT_EQ(mentions[4].field, Field::kCompany);
}

TEST(TagTest, SpansNormalizeToAnAliasOfTheEntity) {
  const testing::SampleData &s = testing::Sample();
  PostingGenerator generator(s.taxonomy, s.templates, 5);
  for (EntityType type : kAllEntityTypes) {
    Matcher m = Matcher::Build(*s.taxonomy, type);
    for (int i = 0; i < 50; ++i) {
      JobPosting p = generator.Next().posting;
      for (const EntityMention &mention : Tag(m, p)) {
        const std::string &text = FieldText(p, mention.field);
        std::string surface = text.substr(mention.char_span.begin,
                                          mention.char_span.size());
        EXPECT_EQ(surface, mention.surface);
        std::vector<std::string> aliases =
            s.taxonomy->Lookup(type, mention.entity_id)->NormalizedAliases();
        EXPECT_NE(std::find(aliases.begin(), aliases.end(),
                            NormalizeKey(surface)),
                  aliases.end());
        EXPECT_LT(mention.start_token, mention.end_token);
      }
    }
  }
}

TEST(TagTest, EqualsNaiveScanOnGeneratedPostings) {
  const testing::SampleData &s = testing::Sample();
  PostingGenerator generator(s.taxonomy, s.templates, 77);
  for (EntityType type : kAllEntityTypes) {
    Matcher m = Matcher::Build(*s.taxonomy, type);
    for (int i = 0; i < 100; ++i) {
      JobPosting p = generator.Next().posting;
      EXPECT_EQ(testing::ToTuples(Tag(m, p)), testing::NaiveTag(*s.taxonomy, type, p));
    }
  }
}

TEST(TagTest, AddingAnEntityNeverRemovesMentions) {
  Taxonomy base = Parse(kSkills);
  Taxonomy grown = Parse(std::string(kSkills) +
                         R"({"type": "skill", "id": "eng", "name": "Engineer"})");
  JobPosting p = Posting("Machine Learning Engineer", "java and spark");
  std::vector<testing::MentionTuple> before =
      testing::ToTuples(Tag(Matcher::Build(base, EntityType::kSkill), p));
  std::vector<testing::MentionTuple> after =
      testing::ToTuples(Tag(Matcher::Build(grown, EntityType::kSkill), p));
  EXPECT_TRUE(std::includes(after.begin(), after.end(), before.begin(), before.end()));
  EXPECT_EQ(after.size(), before.size() + 1);
}

TEST(TitleCandidatesTest, PaperExampleRetrievesBothTitles) {
  const Taxonomy &t = *testing::Sample().taxonomy;
  std::vector<std::string> ids =
      TitleCandidates("Machine Learning Software Engineer", t);
  EXPECT_NE(std::find(ids.begin(), ids.end(), "t_software_engineer"), ids.end());
  EXPECT_NE(std::find(ids.begin(), ids.end(), "t_machine_learning_engineer"),
            ids.end());
  EXPECT_EQ(ids, testing::BruteForceTitleCandidates(
                     t, "Machine Learning Software Engineer"));
}

TEST(TitleCandidatesTest, NoSharedTokenGivesEmptySet) {
  EXPECT_TRUE(TitleCandidates("Zzyzx Qwerty", *testing::Sample().taxonomy).empty());
  EXPECT_TRUE(TitleCandidates("", *testing::Sample().taxonomy).empty());
}

TEST(SentenceTest, SplitsOnTerminators) {
  std::vector<Sentence> s = SplitSentences("Must have a BS. 5+ years required.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].text, "Must have a BS");
  EXPECT_EQ(s[1].text, "5+ years required");
  EXPECT_TRUE(SplitSentences("").empty());
  EXPECT_EQ(SplitSentences("One!\nTwo? Three").size(), 3u);
}

TEST(SentenceTest, SpansReconstructAllNonSeparatorCharacters) {
  Rng rng(9);
  const std::string alphabet = "ab .!?\n\t,";
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    size_t n = rng.Uniform(40);
    for (size_t i = 0; i < n; ++i) text += alphabet[rng.Uniform(alphabet.size())];
    std::string rejoined;
    size_t last_end = 0;
    for (const Sentence &s : SplitSentences(text)) {
      EXPECT_GE(s.span.begin, last_end);
      EXPECT_EQ(text.substr(s.span.begin, s.span.size()), s.text);
      last_end = s.span.end;
      rejoined += s.text;
    }
    std::string expected;
    for (char c : text) {
      if (c != ' ' && c != '\n' && c != '\t' && c != '.' && c != '!' && c != '?') {
        expected += c;
      }
    }
    std::string got;
    for (char c : rejoined) {
      if (c != ' ' && c != '\n' && c != '\t' && c != '.' && c != '!' && c != '?') {
        got += c;
      }
    }
    EXPECT_EQ(got, expected) << text;
  }
}

TEST(NormalizeTest, RandomAsciiSpansCaseFoldToTokens) {
  Rng rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    std::string text;
    size_t n = rng.Uniform(60);
    for (size_t i = 0; i < n; ++i) text += static_cast<char>(rng.Between(32, 126));
    NormalizedText norm = Normalize(text);
    ASSERT_EQ(norm.tokens.size(), norm.spans.size());
    for (size_t i = 0; i < norm.tokens.size(); ++i) {
      EXPECT_EQ(CaseFold(text.substr(norm.spans[i].begin, norm.spans[i].size())),
                norm.tokens[i]);
      if (i > 0) {
        EXPECT_LE(norm.spans[i - 1].end, norm.spans[i].begin);
      }
    }
  }
}

}  // namespace
}  // namespace jobstd
