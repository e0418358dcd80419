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

// Flat "key = value" text documents: '#' starts a comment line, blank lines
// are ignored, keys keep their order of insertion.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sowig {

/// Shortest form is not used: reals are always written with 17 significant digits.
std::string format_real(double value);

/// Parses a full token as a double (including nan/inf). Throws InvalidArgument.
double parse_real(std::string_view text);

class KvDocument {
   public:
    void set(std::string key, std::string value);
    void set_real(std::string key, double value);

    bool has(std::string_view key) const;
    std::optional<std::string> get(std::string_view key) const;
    /// Throws InvalidArgument when the key is missing or not a number.
    double real(std::string_view key) const;
    std::string text(std::string_view key) const;

    const std::vector<std::pair<std::string, std::string>> &entries() const { return entries_; }

    /// One "key = value" line per entry, each prefixed by `prefix`.
    std::string to_text(std::string_view prefix = "") const;

   private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

KvDocument parse_kv(std::string_view text);

}  // namespace sowig
