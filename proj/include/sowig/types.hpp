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

#include <complex>
#include <numbers>

namespace sowig {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Physical constants shared by every state. Only the reduced Planck constant
/// is stored; h = 2*pi*hbar is always derived from it.
struct PhysicalConstants {
    double hbar = 1.0;

    double h() const { return 2.0 * kPi * hbar; }
};

/// Throws InvalidArgument unless hbar is finite and positive.
void validate(const PhysicalConstants &constants);

}  // namespace sowig
