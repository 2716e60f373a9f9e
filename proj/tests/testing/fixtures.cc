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

#include "fixtures.h"

#include <stdlib.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jobstd::testing {

std::filesystem::path DataDir() { return JOBSTD_TEST_DATA_DIR; }
std::filesystem::path TaxonomyPath() { return DataDir() / "taxonomy.jsonl"; }
std::filesystem::path EmbeddingsPath() { return DataDir() / "embeddings.txt"; }
std::filesystem::path TemplatesPath() { return DataDir() / "templates.json"; }
std::filesystem::path PersonaPath() { return DataDir() / "persona_s.json"; }

const SampleData &Sample() {
  static const SampleData *data = [] {
    auto *d = new SampleData;
    d->taxonomy = std::make_shared<const Taxonomy>(LoadTaxonomy(TaxonomyPath()));
    d->embeddings =
        std::make_shared<const EmbeddingTable>(LoadEmbeddings(EmbeddingsPath()));
    d->templates = LoadTemplates(TemplatesPath());
    return d;
  }();
  return *data;
}

TempDir::TempDir() {
  std::string pattern =
      (std::filesystem::temp_directory_path() / "jobstd-test-XXXXXX").string();
  if (mkdtemp(pattern.data()) == nullptr) {
    throw std::runtime_error("mkdtemp failed");
  }
  path_ = pattern;
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string ReadFileBytes(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFileBytes(const std::filesystem::path &path, const std::string &bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << bytes;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace jobstd::testing
