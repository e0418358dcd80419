// Copyright 2026 The sowig Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sowig::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kInvalid = 2,
    kUndersampled = 3,
    kAnalysis = 4,
    kValidateFailed = 5,
};

/// Runs one subcommand. Diagnostics go to `err` as single lines.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// 64-bit FNV-1a over the bytes of `text`.
unsigned long long fnv1a64(std::string_view text);

}  // namespace sowig::cli
