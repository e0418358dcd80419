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

#include "sowig/diag.hpp"

#include <cmath>
#include <iostream>
#include <mutex>

#include "sowig/error.hpp"
#include "sowig/types.hpp"

namespace sowig {

namespace {

std::mutex &handler_mutex() {
    static std::mutex m;
    return m;
}

WarningHandler &current_handler() {
    static WarningHandler handler;
    return handler;
}

}  // namespace

void validate(const PhysicalConstants &constants) {
    if (!std::isfinite(constants.hbar) || constants.hbar <= 0.0) {
        throw InvalidArgument("hbar must be finite and positive");
    }
}

void warn(std::string_view message) {
    std::lock_guard lock(handler_mutex());
    auto &handler = current_handler();
    if (handler) {
        handler(message);
    } else {
        std::cerr << "warning: " << message << '\n';
    }
}

WarningHandler set_warning_handler(WarningHandler handler) {
    std::lock_guard lock(handler_mutex());
    auto previous = std::move(current_handler());
    current_handler() = std::move(handler);
    return previous;
}

WarningCapture::WarningCapture() {
    previous_ = set_warning_handler([this](std::string_view m) { messages_.emplace_back(m); });
}

WarningCapture::~WarningCapture() { set_warning_handler(std::move(previous_)); }

}  // namespace sowig
