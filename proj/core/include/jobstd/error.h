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

#ifndef JOBSTD_ERROR_H_
#define JOBSTD_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace jobstd {

// Stable error codes. The CLI prints them as one-line identifiers, so
// existing names must never change meaning.
enum class ErrorCode {
  kMalformedRecord,
  kDuplicateId,
  kEmptyAlias,
  kEmptyAliasSet,
  kUndefinedStats,
  kSchemaMismatch,
  kDegenerateData,
  kUntrained,
  kDuplicateEventId,
  kInvalidEvent,
  kInvalidArgument,
  kNotFound,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// All recoverable failures in the library are reported with this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Malformed input at a 1-based line number of a line-oriented file.
class MalformedRecord : public Error {
 public:
  MalformedRecord(size_t line, const std::string &reason)
      : Error(ErrorCode::kMalformedRecord,
              "malformed record at line " + std::to_string(line) + ": " +
                  reason),
        line_(line) {}

  size_t line() const { return line_; }

 private:
  size_t line_;
};

}  // namespace jobstd

#endif  // JOBSTD_ERROR_H_
