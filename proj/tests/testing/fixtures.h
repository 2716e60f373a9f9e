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

// Shared test fixtures: the sample data shipped in data/ and scratch
// directories.

#ifndef JOBSTD_TESTS_TESTING_FIXTURES_H_
#define JOBSTD_TESTS_TESTING_FIXTURES_H_

#include <filesystem>
#include <memory>
#include <string>

#include "jobstd/embedding.h"
#include "jobstd/synth.h"
#include "jobstd/taxonomy.h"

namespace jobstd::testing {

std::filesystem::path DataDir();
std::filesystem::path TaxonomyPath();
std::filesystem::path EmbeddingsPath();
std::filesystem::path TemplatesPath();
std::filesystem::path PersonaPath();

// Loaded once per process.
struct SampleData {
  std::shared_ptr<const Taxonomy> taxonomy;
  std::shared_ptr<const EmbeddingTable> embeddings;
  Templates templates;
};
const SampleData &Sample();

// A fresh directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path operator/(const std::string &name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

std::string ReadFileBytes(const std::filesystem::path &path);
void WriteFileBytes(const std::filesystem::path &path, const std::string &bytes);

}  // namespace jobstd::testing

#endif  // JOBSTD_TESTS_TESTING_FIXTURES_H_
