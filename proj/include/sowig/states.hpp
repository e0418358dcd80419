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

#include <vector>

#include "sowig/superosc.hpp"
#include "sowig/types.hpp"

namespace sowig {

/// One displaced squeezed Gaussian,
///   coeff * (pi xi^2)^{-1/4} exp(-(x - center)^2 / (2 xi^2)) exp(i momentum (x - center) / hbar).
/// `momentum` is zero for every state of the superoscillation family; it only
/// exists so that the compass reference state can be represented.
struct GaussianComponent {
    double center = 0.0;
    double xi = 1.0;
    Complex coeff{1.0, 0.0};
    double momentum = 0.0;
};

/// A coherent superposition of Gaussian components sharing one width.
struct StateSpec {
    std::vector<GaussianComponent> components;
    PhysicalConstants constants;
    bool normalized = false;

    /// The width shared by all components. Throws InvalidArgument for mixed widths.
    double common_xi() const;
};

enum class Normalization {
    unit,  ///< rescale coefficients so that <psi|psi> = 1
    raw,   ///< keep the coefficients exactly as constructed
};

void validate(const StateSpec &state);

/// Rescales all coefficients by 1/sqrt(norm_squared(state)).
StateSpec normalize(StateSpec state);

StateSpec build_gaussian(double center, double xi, const PhysicalConstants &constants);

/// Two components at +-delta_x with coefficients 1/sqrt(2) before normalization.
StateSpec build_cat(double delta_x, double xi, const PhysicalConstants &constants,
                    Normalization normalization = Normalization::unit);

/// The superoscillating state: N+1 components at j*delta_x, j = -N/2..N/2, with
/// coefficient K_0 for j = 0 and (-i)^j K_|j| / sqrt(2) otherwise, where
/// (-i)^j for negative j means conj((-i)^|j|) = i^|j|.
StateSpec build_psi(const SuperoscParams &params, double delta_x, double xi,
                    const PhysicalConstants &constants, Normalization normalization = Normalization::unit);

/// Compass state: equal-weight coherent sum of Gaussians at (+-L/2, 0)
/// and (0, +-P/2) in phase space.
StateSpec build_compass(double extent_x, double extent_p, double xi, const PhysicalConstants &constants,
                        Normalization normalization = Normalization::unit);

Complex eval_psi(const StateSpec &state, double x);

/// <psi|psi> from the exact pairwise Gaussian overlaps.
double norm_squared(const StateSpec &state);

/// Distance between the outermost component centers.
double position_extent(const StateSpec &state);

}  // namespace sowig
