// Copyright 2026 The qrecover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRECOVER_CLI_H
#define QRECOVER_CLI_H

#include <ostream>

namespace qrecover {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,
    kExitNegative = 2,
};

/// Entry point of the `qrecover` tool. Subcommands: verify, construct, roundtrip,
/// extend, fixtures. JSON results go to `out`, diagnostics to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qrecover

#endif
