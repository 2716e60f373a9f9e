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

#ifndef JOBSTD_EMBEDDING_H_
#define JOBSTD_EMBEDDING_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jobstd/entity_type.h"

namespace jobstd {

using Vector = std::vector<double>;

// Word and entity vectors of a fixed dimension.
//
// File format: first line "<count> <dim>", then one "<key> v1 ... vd" line
// per vector. Keys of the form ENT::<type>::<id> are entity vectors; every
// other key is a (lowercase) word.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(size_t dimension);

  size_t dimension() const { return dimension_; }
  size_t word_count() const { return words_.size(); }
  size_t entity_count() const { return entities_.size(); }

  // Throw Error(kInvalidArgument) on a dimension mismatch.
  void AddWord(const std::string &word, Vector vector);
  void AddEntity(const EntityKey &key, Vector vector);

  // nullptr when absent.
  const Vector *Word(const std::string &word) const;
  const Vector *Entity(const EntityKey &key) const;

 private:
  size_t dimension_;
  std::unordered_map<std::string, Vector> words_;
  std::map<EntityKey, Vector> entities_;
};

EmbeddingTable ParseEmbeddings(std::istream &in);
EmbeddingTable LoadEmbeddings(const std::filesystem::path &path);

// Optional tanh(W x + b) layer applied to the averaged word vector. W is
// stored row-major, dimension x dimension.
struct Projection {
  Vector weights;
  Vector bias;

  static Projection Identity(size_t dimension);
  size_t dimension() const { return bias.size(); }

  bool operator==(const Projection &) const = default;
};

struct Encoding {
  Vector vector;
  // Set when the result is the zero vector (no in-vocabulary token, or the
  // projection output vanished).
  bool zero = false;
};

// Averaging sentence encoder: mean of in-vocabulary word vectors, optional
// projection, then L2 normalization.
class SentenceEncoder {
 public:
  explicit SentenceEncoder(std::shared_ptr<const EmbeddingTable> table,
                           std::optional<Projection> projection = std::nullopt);

  Encoding Encode(std::string_view text) const;
  Encoding EncodeTokens(std::span<const std::string> tokens) const;

  // Mean of in-vocabulary token vectors; `found` receives the count.
  Vector Mean(std::span<const std::string> tokens, size_t *found) const;

  // Projection (when present) and normalization of a mean vector.
  Encoding Finish(const Vector &mean, bool any_token) const;

  size_t dimension() const { return table_->dimension(); }
  bool has_projection() const { return projection_.has_value(); }
  const std::optional<Projection> &projection() const { return projection_; }
  const EmbeddingTable &table() const { return *table_; }
  const std::shared_ptr<const EmbeddingTable> &shared_table() const {
    return table_;
  }

 private:
  std::shared_ptr<const EmbeddingTable> table_;
  std::optional<Projection> projection_;
};

double Dot(std::span<const double> a, std::span<const double> b);
double Norm(std::span<const double> a);
// Zero when either vector is zero.
double Cosine(std::span<const double> a, std::span<const double> b);

}  // namespace jobstd

#endif  // JOBSTD_EMBEDDING_H_
