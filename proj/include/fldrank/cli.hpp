// Copyright 2026 The fldrank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fldrank::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,   // runtime failure (convergence, changed input on replay, ...)
  kUsage = 2,     // bad flags or arguments, unknown node labels
  kParseError = 3,
  kIoError = 4,
};

/// Runs the command line `args` (without the program name). Data rows go to
/// `out` unless --out is given; diagnostics and, when no file is named, the
/// run manifest go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fldrank::cli
