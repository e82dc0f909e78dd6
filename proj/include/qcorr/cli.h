// Copyright 2026 The qcorr Authors
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

#ifndef QCORR_CLI_H
#define QCORR_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qcorr::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kValidationFailure = 1,
    kInvalidInput = 2,
    kNumericalFailure = 3,
};

/// Runs `qcorr <command> [options]`. `args` excludes the program name. The
/// result document goes to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qcorr::cli

#endif
