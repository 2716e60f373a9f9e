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

#ifndef JOBSTD_TOOLS_CLI_CLI_H_
#define JOBSTD_TOOLS_CLI_CLI_H_

#include <ostream>

namespace jobstd {

// Process exit codes of the jobstd tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,  // bad flags, unknown subcommand, missing input path
  kExitData = 2,   // input that fails to load or validate
};

// Runs the jobstd command line. Regular output goes to `out`; diagnostics
// go to `err` as single lines of the form "jobstd: <code>: <message>".
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

}  // namespace jobstd

#endif  // JOBSTD_TOOLS_CLI_CLI_H_
