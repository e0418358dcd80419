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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace sowig {

using WarningHandler = std::function<void(std::string_view)>;

/// Reports a non-fatal condition. Goes to stderr unless a handler is installed.
void warn(std::string_view message);

/// Installs a process-wide handler and returns the previous one. An empty
/// handler restores the stderr default.
WarningHandler set_warning_handler(WarningHandler handler);

/// Collects warnings for the lifetime of the object, restoring the previous
/// handler on destruction.
class WarningCapture {
   public:
    WarningCapture();
    ~WarningCapture();
    WarningCapture(const WarningCapture &) = delete;
    WarningCapture &operator=(const WarningCapture &) = delete;

    const std::vector<std::string> &messages() const { return messages_; }

   private:
    std::vector<std::string> messages_;
    WarningHandler previous_;
};

}  // namespace sowig
