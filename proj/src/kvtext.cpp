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

#include "sowig/kvtext.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "sowig/error.hpp"

namespace sowig {

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

double parse_real(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw InvalidArgument("expected a number, got an empty string");
    char *end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    // ERANGE on underflow still yields the correctly rounded subnormal or zero.
    if (end != s.c_str() + s.size() || (errno == ERANGE && std::isinf(v))) throw InvalidArgument("not a number: '" + s + "'");
    return v;
}

void KvDocument::set(std::string key, std::string value) {
    for (auto &[k, v] : entries_) {
        if (k == key) {
            v = std::move(value);
            return;
        }
    }
    entries_.emplace_back(std::move(key), std::move(value));
}

void KvDocument::set_real(std::string key, double value) { set(std::move(key), format_real(value)); }

bool KvDocument::has(std::string_view key) const { return get(key).has_value(); }

std::optional<std::string> KvDocument::get(std::string_view key) const {
    for (const auto &[k, v] : entries_) {
        if (k == key) return v;
    }
    return std::nullopt;
}

double KvDocument::real(std::string_view key) const { return parse_real(text(key)); }

std::string KvDocument::text(std::string_view key) const {
    auto v = get(key);
    if (!v) throw InvalidArgument("missing key '" + std::string(key) + "'");
    return *v;
}

std::string KvDocument::to_text(std::string_view prefix) const {
    std::string out;
    for (const auto &[k, v] : entries_) {
        out.append(prefix).append(k).append(" = ").append(v).push_back('\n');
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

KvDocument parse_kv(std::string_view text) {
    KvDocument doc;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        const std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw InvalidArgument("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) throw InvalidArgument("line " + std::to_string(line_no) + ": empty key");
        doc.set(std::string(key), std::string(trim(line.substr(eq + 1))));
    }
    return doc;
}

}  // namespace sowig
