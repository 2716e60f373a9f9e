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

#ifndef JOBSTD_TYPEAHEAD_H_
#define JOBSTD_TYPEAHEAD_H_

#include <string>
#include <string_view>
#include <vector>

#include "jobstd/taxonomy.h"

namespace jobstd {

struct TypeaheadHit {
  std::string id;
  std::string name;

  bool operator==(const TypeaheadHit &) const = default;
};

// Prefix completion over standardized titles.
//
// A title matches when one of its normalized aliases contains the query's
// tokens consecutively, with the last query token matching a prefix of the
// alias token. Results are ordered by canonical name length, then name.
class TitleTypeahead {
 public:
  explicit TitleTypeahead(const Taxonomy &taxonomy);

  // Returns an empty list when the query has no tokens.
  std::vector<TypeaheadHit> Complete(std::string_view query,
                                     size_t limit = 10) const;

 private:
  struct Entry {
    std::string id;
    std::string name;
    std::vector<std::vector<std::string>> aliases;  // tokenized
  };

  // (token, entry index), sorted by token for prefix range scans.
  std::vector<std::pair<std::string, size_t>> tokens_;
  std::vector<Entry> entries_;
};

}  // namespace jobstd

#endif  // JOBSTD_TYPEAHEAD_H_
