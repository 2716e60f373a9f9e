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

#include "jobstd/embedding.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "jobstd/error.h"
#include "jobstd/text.h"

namespace jobstd {
namespace {

constexpr std::string_view kEntityPrefix = "ENT::";

}  // namespace

EmbeddingTable::EmbeddingTable(size_t dimension) : dimension_(dimension) {
  if (dimension == 0) {
    throw Error(ErrorCode::kInvalidArgument, "embedding dimension must be > 0");
  }
}

void EmbeddingTable::AddWord(const std::string &word, Vector vector) {
  if (vector.size() != dimension_) {
    throw Error(ErrorCode::kInvalidArgument,
                "vector for '" + word + "' has wrong dimension");
  }
  words_[word] = std::move(vector);
}

void EmbeddingTable::AddEntity(const EntityKey &key, Vector vector) {
  if (vector.size() != dimension_) {
    throw Error(ErrorCode::kInvalidArgument,
                "vector for " + ToString(key) + " has wrong dimension");
  }
  entities_[key] = std::move(vector);
}

const Vector *EmbeddingTable::Word(const std::string &word) const {
  auto it = words_.find(word);
  return it == words_.end() ? nullptr : &it->second;
}

const Vector *EmbeddingTable::Entity(const EntityKey &key) const {
  auto it = entities_.find(key);
  return it == entities_.end() ? nullptr : &it->second;
}

EmbeddingTable ParseEmbeddings(std::istream &in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw MalformedRecord(1, "missing '<count> <dim>' header");
  }
  std::istringstream header(line);
  size_t count = 0;
  size_t dim = 0;
  if (!(header >> count >> dim) || dim == 0) {
    throw MalformedRecord(1, "bad '<count> <dim>' header");
  }
  EmbeddingTable table(dim);
  size_t line_no = 1;
  size_t records = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string key;
    fields >> key;
    Vector vector;
    vector.reserve(dim);
    double value = 0;
    while (fields >> value) vector.push_back(value);
    if (!fields.eof() || vector.size() != dim) {
      throw MalformedRecord(line_no, "expected " + std::to_string(dim) +
                                         " numbers after '" + key + "'");
    }
    if (std::string_view(key).starts_with(kEntityPrefix)) {
      std::string_view rest = std::string_view(key).substr(kEntityPrefix.size());
      size_t sep = rest.find("::");
      if (sep == std::string_view::npos) {
        throw MalformedRecord(line_no, "entity key must be ENT::<type>::<id>");
      }
      auto type = ParseEntityType(rest.substr(0, sep));
      if (!type) throw MalformedRecord(line_no, "unknown entity type");
      table.AddEntity({*type, std::string(rest.substr(sep + 2))},
                      std::move(vector));
    } else {
      table.AddWord(CaseFold(key), std::move(vector));
    }
    ++records;
  }
  if (records != count) {
    throw MalformedRecord(1, "header declares " + std::to_string(count) +
                                 " vectors, file has " +
                                 std::to_string(records));
  }
  return table;
}

EmbeddingTable LoadEmbeddings(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open embeddings " + path.string());
  }
  return ParseEmbeddings(in);
}

Projection Projection::Identity(size_t dimension) {
  Projection p;
  p.weights.assign(dimension * dimension, 0.0);
  for (size_t i = 0; i < dimension; ++i) p.weights[i * dimension + i] = 1.0;
  p.bias.assign(dimension, 0.0);
  return p;
}

SentenceEncoder::SentenceEncoder(std::shared_ptr<const EmbeddingTable> table,
                                 std::optional<Projection> projection)
    : table_(std::move(table)), projection_(std::move(projection)) {
  if (projection_) {
    size_t d = table_->dimension();
    if (projection_->bias.size() != d || projection_->weights.size() != d * d) {
      throw Error(ErrorCode::kInvalidArgument,
                  "projection does not match embedding dimension");
    }
  }
}

Vector SentenceEncoder::Mean(std::span<const std::string> tokens,
                             size_t *found) const {
  Vector sum(dimension(), 0.0);
  size_t n = 0;
  for (const std::string &token : tokens) {
    const Vector *v = table_->Word(token);
    if (v == nullptr) continue;
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += (*v)[i];
    ++n;
  }
  if (n > 0) {
    for (double &x : sum) x /= static_cast<double>(n);
  }
  if (found != nullptr) *found = n;
  return sum;
}

Encoding SentenceEncoder::Finish(const Vector &mean, bool any_token) const {
  size_t d = dimension();
  Encoding out;
  if (!any_token) {
    out.vector.assign(d, 0.0);
    out.zero = true;
    return out;
  }
  Vector h = mean;
  if (projection_) {
    for (size_t i = 0; i < d; ++i) {
      double a = projection_->bias[i];
      const double *row = &projection_->weights[i * d];
      for (size_t j = 0; j < d; ++j) a += row[j] * mean[j];
      h[i] = std::tanh(a);
    }
  }
  double norm = Norm(h);
  if (norm == 0.0) {
    out.vector.assign(d, 0.0);
    out.zero = true;
    return out;
  }
  for (double &x : h) x /= norm;
  out.vector = std::move(h);
  return out;
}

Encoding SentenceEncoder::EncodeTokens(
    std::span<const std::string> tokens) const {
  size_t found = 0;
  Vector mean = Mean(tokens, &found);
  return Finish(mean, found > 0);
}

Encoding SentenceEncoder::Encode(std::string_view text) const {
  return EncodeTokens(Normalize(text).tokens);
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

double Norm(std::span<const double> a) { return std::sqrt(Dot(a, a)); }

double Cosine(std::span<const double> a, std::span<const double> b) {
  double na = Norm(a);
  double nb = Norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  double c = Dot(a, b) / (na * nb);
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace jobstd
