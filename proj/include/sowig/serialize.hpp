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

#include <string>
#include <string_view>

#include "sowig/analysis.hpp"
#include "sowig/states.hpp"

namespace sowig {

/// Flat key = value form of a state: hbar, normalized, components and
/// component.<i>.{center, xi, coeff_re, coeff_im, momentum}. Reals carry 17
/// significant digits, so the round trip is exact.
std::string state_to_text(const StateSpec &state);
StateSpec state_from_text(std::string_view text);

/// Key = value form of a scale report (crossing_spacings is a comma list).
std::string report_to_text(const ScaleReport &report);
ScaleReport report_from_text(std::string_view text);

}  // namespace sowig
