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

#include "jobstd/taxonomy.h"

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "fixtures.h"
#include "jobstd/error.h"
#include "jobstd/text.h"
#include "jobstd/wire.h"

namespace jobstd {
namespace {

Taxonomy Parse(const std::string &jsonl) {
  std::istringstream in(jsonl);
  return ParseTaxonomy(in);
}

ErrorCode ParseErrorCode(const std::string &jsonl) {
  try {
    Parse(jsonl);
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error for " << jsonl;
  return ErrorCode::kIo;
}

constexpr char kSmall[] =
    R"({"type": "title", "id": "t1", "name": "Software Engineer", "aliases": ["software developer"], "attributes": {"industry": "software"}}
{"type": "skill", "id": "s_java", "name": "Java", "aliases": []}
{"type": "skill", "id": "s_java_lang", "name": "Java Language", "aliases": ["JAVA"]}
)";

TEST(TaxonomyTest, LookupFindsPresentEntitiesOnly) {
  Taxonomy t = Parse(kSmall);
  ASSERT_NE(t.Lookup(EntityType::kTitle, "t1"), nullptr);
  EXPECT_EQ(t.Lookup(EntityType::kTitle, "t1")->canonical_name,
            "Software Engineer");
  EXPECT_EQ(t.Lookup(EntityType::kSkill, "nonexistent"), nullptr);
  // Ids are scoped by type.
  EXPECT_EQ(t.Lookup(EntityType::kSkill, "t1"), nullptr);
}

TEST(TaxonomyTest, SharedAliasMapsToEveryEntity) {
  Taxonomy t = Parse(kSmall);
  const AliasIndex &index = t.alias_index(EntityType::kSkill);
  ASSERT_TRUE(index.contains("java"));
  EXPECT_EQ(index.at("java"),
            (std::vector<std::string>{"s_java", "s_java_lang"}));
}

TEST(TaxonomyTest, AliasKeysAreNormalized) {
  Taxonomy t = Parse(kSmall);
  const AliasIndex &index = t.alias_index(EntityType::kTitle);
  EXPECT_TRUE(index.contains("software engineer"));
  EXPECT_TRUE(index.contains("software developer"));
  EXPECT_EQ(index.size(), 2u);
}

TEST(TaxonomyTest, RejectsDuplicateIdsAndEmptyAliases) {
  EXPECT_EQ(ParseErrorCode(
                R"({"type": "skill", "id": "a", "name": "A"}
{"type": "skill", "id": "a", "name": "B"})"),
            ErrorCode::kDuplicateId);
  EXPECT_EQ(ParseErrorCode(R"({"type": "skill", "id": "a", "name": "!!"})"),
            ErrorCode::kEmptyAlias);
  EXPECT_EQ(ParseErrorCode(
                R"({"type": "skill", "id": "a", "name": "A", "aliases": ["--"]})"),
            ErrorCode::kEmptyAlias);
}

TEST(TaxonomyTest, ReportsMalformedLines) {
  EXPECT_EQ(ParseErrorCode("{not json"), ErrorCode::kMalformedRecord);
  EXPECT_EQ(ParseErrorCode(R"({"type": "planet", "id": "a", "name": "A"})"),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(ParseErrorCode(R"({"type": "skill", "name": "A"})"),
            ErrorCode::kMalformedRecord);
  // Titles need an industry; question templates at most one placeholder.
  EXPECT_EQ(ParseErrorCode(R"({"type": "title", "id": "t", "name": "T"})"),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(
      ParseErrorCode(
          R"({"type": "question", "id": "q", "name": "Q", "attributes": {"template": "{a} and {b}?"}})"),
      ErrorCode::kMalformedRecord);
}

TEST(TaxonomyTest, MalformedRecordCarriesLineNumber) {
  try {
    Parse(std::string(kSmall) + "\n{oops\n");
    FAIL();
  } catch (const MalformedRecord &e) {
    EXPECT_EQ(e.line(), 5u);
  }
}

TEST(TaxonomyTest, AliasesDeduplicatedWithCanonicalNameFirst) {
  Taxonomy t = Parse(
      R"({"type": "skill", "id": "a", "name": "Machine Learning", "aliases": ["machine  learning", "ML"]})");
  EXPECT_EQ(t.Lookup(EntityType::kSkill, "a")->aliases,
            (std::vector<std::string>{"Machine Learning", "ML"}));
}

TEST(TaxonomyTest, SampleFileLookupSucceedsForEveryId) {
  // Enumerate the ids straight from the file and probe each one.
  std::ifstream in(testing::TaxonomyPath());
  Taxonomy t = LoadTaxonomy(testing::TaxonomyPath());
  size_t probed = 0;
  ForEachJsonLine(in, [&](const Json &json, size_t) {
    EntityType type = EntityTypeFromName(json["type"].get<std::string>());
    EXPECT_NE(t.Lookup(type, json["id"].get<std::string>()), nullptr);
    ++probed;
  });
  EXPECT_EQ(probed, t.size());
  EXPECT_EQ(probed, 203u);
}

TEST(TaxonomyTest, SampleAliasIndexSizeMatchesDistinctNormalizedAliases) {
  Taxonomy t = LoadTaxonomy(testing::TaxonomyPath());
  std::ifstream in(testing::TaxonomyPath());
  std::map<EntityType, std::set<std::string>> distinct;
  ForEachJsonLine(in, [&](const Json &json, size_t) {
    EntityType type = EntityTypeFromName(json["type"].get<std::string>());
    distinct[type].insert(NormalizeKey(json["name"].get<std::string>()));
    for (const Json &a : json.value("aliases", Json::array())) {
      distinct[type].insert(NormalizeKey(a.get<std::string>()));
    }
  });
  for (EntityType type : kAllEntityTypes) {
    EXPECT_EQ(t.alias_index(type).size(), distinct[type].size())
        << EntityTypeName(type);
    EXPECT_EQ(t.alias_index(type), BuildAliasIndex(t, type));
  }
}

TEST(TaxonomyTest, AliasIndexIsCompleteInverse) {
  const Taxonomy &t = *testing::Sample().taxonomy;
  for (const TaxonomyEntity &e : t.entities()) {
    for (const std::string &alias : e.aliases) {
      const std::vector<std::string> &ids =
          t.alias_index(e.type).at(NormalizeKey(alias));
      EXPECT_NE(std::find(ids.begin(), ids.end(), e.id), ids.end());
    }
  }
}

TEST(TaxonomyTest, WriteThenParseRoundTrips) {
  Taxonomy t = LoadTaxonomy(testing::TaxonomyPath());
  std::ostringstream out;
  WriteTaxonomy(t, out);
  std::istringstream in(out.str());
  EXPECT_EQ(ParseTaxonomy(in), t);
  EXPECT_EQ(LoadTaxonomy(testing::TaxonomyPath()), t);
}

TEST(TaxonomyTest, EqualityIgnoresOrder) {
  Taxonomy a = Parse(kSmall);
  std::string reversed =
      R"({"type": "skill", "id": "s_java_lang", "name": "Java Language", "aliases": ["JAVA"]}
{"type": "skill", "id": "s_java", "name": "Java"}
{"type": "title", "id": "t1", "name": "Software Engineer", "aliases": ["software developer"], "attributes": {"industry": "software"}}
)";
  EXPECT_EQ(Parse(reversed), a);
}

TEST(TaxonomyTest, VersionComesFromTheCaller) {
  std::istringstream in(kSmall);
  EXPECT_EQ(ParseTaxonomy(in, 7).version(), 7);
  EXPECT_EQ(Parse(kSmall).version(), 1);
}

}  // namespace
}  // namespace jobstd
