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

#include "jobstd/features.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "jobstd/error.h"
#include "jobstd/text.h"

namespace jobstd {
namespace {

std::u32string CodePoints(std::string_view text) {
  std::u32string out;
  size_t pos = 0;
  while (pos < text.size()) out.push_back(DecodeUtf8(text, pos));
  return out;
}

std::map<std::u32string, int> Trigrams(const std::u32string &s) {
  std::map<std::u32string, int> grams;
  if (s.empty()) return grams;
  if (s.size() < 3) {
    grams[s] = 1;
    return grams;
  }
  for (size_t i = 0; i + 3 <= s.size(); ++i) ++grams[s.substr(i, 3)];
  return grams;
}

std::set<std::string> TokenSet(std::string_view text) {
  NormalizedText n = Normalize(text);
  return {n.tokens.begin(), n.tokens.end()};
}

bool Intersects(const std::set<std::string> &a, const std::set<std::string> &b) {
  for (const std::string &x : a) {
    if (b.contains(x)) return true;
  }
  return false;
}

}  // namespace

double NgramSimilarity(std::string_view a, std::string_view b) {
  std::u32string na = CodePoints(NormalizeKey(a));
  std::u32string nb = CodePoints(NormalizeKey(b));
  if (na.empty() && nb.empty()) return 1.0;
  auto ga = Trigrams(na);
  auto gb = Trigrams(nb);
  double inter = 0;
  double uni = 0;
  auto ia = ga.begin();
  auto ib = gb.begin();
  while (ia != ga.end() || ib != gb.end()) {
    if (ib == gb.end() || (ia != ga.end() && ia->first < ib->first)) {
      uni += ia->second;
      ++ia;
    } else if (ia == ga.end() || ib->first < ia->first) {
      uni += ib->second;
      ++ib;
    } else {
      inter += std::min(ia->second, ib->second);
      uni += std::max(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  return uni == 0 ? 1.0 : inter / uni;
}

double EditSimilarity(std::string_view a, std::string_view b) {
  std::u32string na = CodePoints(NormalizeKey(a));
  std::u32string nb = CodePoints(NormalizeKey(b));
  size_t longest = std::max(na.size(), nb.size());
  if (longest == 0) return 1.0;
  std::vector<size_t> prev(nb.size() + 1);
  std::vector<size_t> cur(nb.size() + 1);
  for (size_t j = 0; j <= nb.size(); ++j) prev[j] = j;
  for (size_t i = 1; i <= na.size(); ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= nb.size(); ++j) {
      size_t sub = prev[j - 1] + (na[i - 1] == nb[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return 1.0 - static_cast<double>(prev[nb.size()]) /
                   static_cast<double>(longest);
}

double Coherence(std::span<const double> candidate,
                 std::span<const Vector> others) {
  if (others.empty() || candidate.empty()) return 0.0;
  Vector centroid(candidate.size(), 0.0);
  for (const Vector &v : others) {
    for (size_t i = 0; i < centroid.size() && i < v.size(); ++i) {
      centroid[i] += v[i];
    }
  }
  for (double &x : centroid) x /= static_cast<double>(others.size());
  return Cosine(candidate, centroid);
}

double Coherence(const EntityKey &candidate, std::span<const EntityKey> others,
                 const EmbeddingTable &table) {
  const Vector *v = table.Entity(candidate);
  if (v == nullptr) return 0.0;
  std::vector<Vector> vectors;
  for (const EntityKey &key : others) {
    if (const Vector *o = table.Entity(key)) vectors.push_back(*o);
  }
  return Coherence(*v, vectors);
}

std::vector<Candidate> GroupMentions(std::span<const EntityMention> mentions) {
  std::vector<Candidate> out;
  std::map<EntityKey, size_t> index;
  for (const EntityMention &m : mentions) {
    EntityKey key{m.entity_type, m.entity_id};
    auto [it, inserted] = index.emplace(key, out.size());
    if (inserted) out.push_back({key, m.surface, {}});
    out[it->second].occurrences.push_back({m.field, m.char_span});
  }
  return out;
}

std::vector<std::string> EmailDomainLabels(std::string_view email) {
  size_t at = email.rfind('@');
  if (at == std::string_view::npos) return {};
  std::string_view domain = email.substr(at + 1);
  std::vector<std::string_view> labels;
  size_t start = 0;
  while (start <= domain.size()) {
    size_t dot = domain.find('.', start);
    if (dot == std::string_view::npos) dot = domain.size();
    labels.push_back(domain.substr(start, dot - start));
    start = dot + 1;
  }
  if (labels.size() > 1) labels.pop_back();
  std::vector<std::string> out;
  for (std::string_view label : labels) {
    std::string joined;
    for (const std::string &t : Normalize(label).tokens) joined += t;
    if (!joined.empty()) out.push_back(joined);
  }
  return out;
}

PostingContext::PostingContext(const JobPosting &posting,
                               const SentenceEncoder &encoder)
    : posting_(&posting),
      encoder_(&encoder),
      description_(encoder.Encode(posting.description)),
      sentences_(SplitSentences(posting.description)) {}

Encoding PostingContext::ContextEncoding(const Occurrence &occurrence) const {
  if (occurrence.field != Field::kDescription) {
    return encoder_->Encode(FieldText(*posting_, occurrence.field));
  }
  for (const Sentence &s : sentences_) {
    if (occurrence.span.begin >= s.span.begin &&
        occurrence.span.begin < s.span.end) {
      return encoder_->Encode(s.text);
    }
  }
  return encoder_->Encode(std::string_view(posting_->description)
                              .substr(occurrence.span.begin,
                                      occurrence.span.size()));
}

FeatureExtractor::FeatureExtractor(const Taxonomy &taxonomy,
                                   const SentenceEncoder &encoder,
                                   const MarketStats &stats)
    : taxonomy_(&taxonomy), encoder_(&encoder), stats_(&stats) {}

Vector FeatureExtractor::EntityVector(const EntityKey &key) const {
  if (const Vector *v = encoder_->table().Entity(key)) return *v;
  const TaxonomyEntity *entity = taxonomy_->Lookup(key);
  if (entity == nullptr) return {};
  Encoding e = encoder_->Encode(entity->canonical_name);
  return e.zero ? Vector{} : e.vector;
}

FeatureVector FeatureExtractor::Extract(
    const PostingContext &context, const Candidate &candidate,
    std::span<const Candidate> peers) const {
  const JobPosting &posting = context.posting();
  const TaxonomyEntity *entity = taxonomy_->Lookup(candidate.key);
  if (entity == nullptr) {
    throw Error(ErrorCode::kNotFound,
                "candidate " + ToString(candidate.key) + " not in taxonomy");
  }
  FeatureVector x;

  // Lexical.
  x[kNgramSim] = NgramSimilarity(candidate.surface, entity->canonical_name);
  x[kEditSim] = EditSimilarity(candidate.surface, entity->canonical_name);
  x[kExactMatch] =
      NormalizeKey(candidate.surface) == NormalizeKey(entity->canonical_name)
          ? 1.0
          : 0.0;

  // Position and frequency.
  x[kMentionCount] = static_cast<double>(candidate.occurrences.size());
  bool in_title = false;
  const Occurrence *first_description = nullptr;
  for (const Occurrence &o : candidate.occurrences) {
    if (o.field == Field::kTitle) in_title = true;
    if (o.field == Field::kDescription &&
        (first_description == nullptr ||
         o.span.begin < first_description->span.begin)) {
      first_description = &o;
    }
  }
  x[kInTitle] = in_title ? 1.0 : 0.0;
  if (in_title) {
    x[kFirstPosFrac] = 0.0;
  } else if (first_description != nullptr && !posting.description.empty()) {
    x[kFirstPosFrac] = static_cast<double>(first_description->span.begin) /
                       static_cast<double>(posting.description.size());
  } else {
    x[kFirstPosFrac] = 1.0;
  }

  // Posting metadata.
  if (candidate.key.type == EntityType::kCompany &&
      !posting.contact_email.empty()) {
    std::vector<std::string> labels = EmailDomainLabels(posting.contact_email);
    for (const std::string &alias : entity->aliases) {
      NormalizedText n = Normalize(alias);
      std::string joined;
      for (const std::string &t : n.tokens) joined += t;
      for (const std::string &label : labels) {
        if (label == joined ||
            std::find(n.tokens.begin(), n.tokens.end(), label) !=
                n.tokens.end()) {
          x[kEmailDomainMatch] = 1.0;
        }
      }
    }
  }
  if (!posting.location.empty()) {
    std::set<std::string> location = TokenSet(posting.location);
    for (const auto &[name, value] : entity->attributes) {
      if (Intersects(location, TokenSet(value))) x[kLocationMatch] = 1.0;
    }
  }

  // Semantic.
  Vector entity_vector = EntityVector(candidate.key);
  if (encoder_->table().Entity(candidate.key) == nullptr) {
    x.flags |= kFlagNoEntityVector;
  }
  const Encoding &description = context.description_encoding();
  if (description.zero) x.flags |= kFlagPostingOov;
  x[kSemPostingCos] = Cosine(description.vector, entity_vector);
  if (!candidate.occurrences.empty()) {
    Encoding around = context.ContextEncoding(candidate.occurrences.front());
    if (around.zero) x.flags |= kFlagContextOov;
    x[kSemContextCos] = Cosine(around.vector, entity_vector);
  } else {
    x.flags |= kFlagContextOov;
  }
  std::vector<Vector> others;
  for (const Candidate &peer : peers) {
    if (peer.key == candidate.key) continue;
    Vector v = EntityVector(peer.key);
    if (!v.empty()) others.push_back(std::move(v));
  }
  x[kCoherenceCos] = entity_vector.empty() ? 0.0 : Coherence(entity_vector, others);

  // Market.
  if (stats_->total() > 0) {
    x[kPmiIndustry] = Pmi(*stats_, posting.industry, candidate.key);
  } else {
    x.flags |= kFlagPmiUndefined;
  }
  AcceptanceCounter counter = stats_->acceptance(candidate.key, posting.industry);
  x[kAcceptanceRateSmoothed] = AcceptanceRate(counter);
  x[kLogShown] = std::log1p(static_cast<double>(counter.shown));
  return x;
}

FeatureVector Extract(const JobPosting &posting, const Candidate &candidate,
                      std::span<const Candidate> peers,
                      const SentenceEncoder &encoder, const MarketStats &stats,
                      const Taxonomy &taxonomy) {
  PostingContext context(posting, encoder);
  return FeatureExtractor(taxonomy, encoder, stats)
      .Extract(context, candidate, peers);
}

}  // namespace jobstd
