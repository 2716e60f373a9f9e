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

#ifndef JOBSTD_FEATURES_H_
#define JOBSTD_FEATURES_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jobstd/embedding.h"
#include "jobstd/feature_vector.h"
#include "jobstd/market_stats.h"
#include "jobstd/tagger.h"
#include "jobstd/taxonomy.h"

namespace jobstd {

// Multiset Jaccard similarity of character trigrams of the normalized
// strings. A normalized string shorter than three characters is its own
// single gram. Two empty strings are identical (1).
double NgramSimilarity(std::string_view a, std::string_view b);

// 1 - Levenshtein(a, b) / max(|a|, |b|) over normalized code points.
double EditSimilarity(std::string_view a, std::string_view b);

// Cosine between `candidate` and the centroid of `others`. Zero when there
// are no others.
double Coherence(std::span<const double> candidate,
                 std::span<const Vector> others);

// Same, reading entity vectors from the table; others without a vector are
// skipped. Zero when the candidate has no vector.
double Coherence(const EntityKey &candidate, std::span<const EntityKey> others,
                 const EmbeddingTable &table);

// Where an entity occurs in a posting.
struct Occurrence {
  Field field = Field::kDescription;
  CharSpan span;

  bool operator==(const Occurrence &) const = default;
};

// One entity proposed for a posting, with the evidence that produced it.
struct Candidate {
  EntityKey key;
  // Text compared lexically with the canonical name: the first mention's
  // surface, the raw title for title candidates, or the sentence for
  // question candidates.
  std::string surface;
  std::vector<Occurrence> occurrences;  // ordered by field, then offset
};

// One candidate per distinct entity, in order of first mention.
std::vector<Candidate> GroupMentions(std::span<const EntityMention> mentions);

// Per-posting values shared by every candidate's feature extraction.
class PostingContext {
 public:
  PostingContext(const JobPosting &posting, const SentenceEncoder &encoder);

  const JobPosting &posting() const { return *posting_; }
  const Encoding &description_encoding() const { return description_; }
  const std::vector<Sentence> &sentences() const { return sentences_; }

  // Encoding of the text surrounding an occurrence: the sentence containing
  // it for the description, the whole field otherwise.
  Encoding ContextEncoding(const Occurrence &occurrence) const;

 private:
  const JobPosting *posting_;
  const SentenceEncoder *encoder_;
  Encoding description_;
  std::vector<Sentence> sentences_;
};

// Computes the fixed 14-value feature schema for (posting, candidate)
// pairs. Pure: identical inputs produce bitwise-identical vectors.
class FeatureExtractor {
 public:
  FeatureExtractor(const Taxonomy &taxonomy, const SentenceEncoder &encoder,
                   const MarketStats &stats);

  // `peers` are all candidates of the same type for the posting; the
  // candidate itself may be among them.
  FeatureVector Extract(const PostingContext &context,
                        const Candidate &candidate,
                        std::span<const Candidate> peers) const;

  // Entity vector, falling back to the encoding of the canonical name.
  // Empty when neither is available.
  Vector EntityVector(const EntityKey &key) const;

  const SentenceEncoder &encoder() const { return *encoder_; }
  const Taxonomy &taxonomy() const { return *taxonomy_; }
  const MarketStats &stats() const { return *stats_; }

 private:
  const Taxonomy *taxonomy_;
  const SentenceEncoder *encoder_;
  const MarketStats *stats_;
};

// Convenience wrapper: builds the context and extracts one vector.
FeatureVector Extract(const JobPosting &posting, const Candidate &candidate,
                      std::span<const Candidate> peers,
                      const SentenceEncoder &encoder, const MarketStats &stats,
                      const Taxonomy &taxonomy);

// Domain labels of a contact email ("jobs@mail.acme.com" -> mail, acme),
// without the top-level domain, normalized and concatenated per label.
std::vector<std::string> EmailDomainLabels(std::string_view email);

}  // namespace jobstd

#endif  // JOBSTD_FEATURES_H_
