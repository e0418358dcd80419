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

// Brute-force references for the closed-form engine: the defining Wigner
// integral and the state norm, both by composite Simpson quadrature.

#include <cstddef>
#include <stdexcept>

#include "sowig/states.hpp"

namespace sowig {

struct QuadratureSpec {
    double y_halfwidth = 1.0;  ///< integrate over [-y_halfwidth, y_halfwidth]
    std::size_t n_points = 2;  ///< number of panels, even
};

struct QuadratureResult {
    double value = 0.0;  ///< real part, the Wigner value
    double imag = 0.0;   ///< imaginary residue, diagnostic only
};

/// Composite Simpson rule with `panels` (even) subintervals on [lo, hi].
template <typename T, typename Fn>
T simpson(Fn &&f, double lo, double hi, std::size_t panels) {
    if (panels < 2 || panels % 2 != 0) throw std::invalid_argument("simpson: panel count must be even and >= 2");
    const double h = (hi - lo) / static_cast<double>(panels);
    T odd{}, even{};
    for (std::size_t k = 1; k < panels; ++k) {
        const T v = f(lo + static_cast<double>(k) * h);
        if (k % 2 == 1) {
            odd += v;
        } else {
            even += v;
        }
    }
    return (f(lo) + f(hi) + 4.0 * odd + 2.0 * even) * (h / 3.0);
}

/// Window max|center| + 8 xi, panel count from the fringe criterion at momentum p.
QuadratureSpec default_wigner_quadrature(const StateSpec &state, double p);

/// Smallest even panel count accepted by wigner_quadrature for this window.
std::size_t required_wigner_panels(const StateSpec &state, double p, double y_halfwidth);

/// (1/pi hbar) Int psi*(x+y) psi(x-y) e^{2ipy/hbar} dy. Throws UndersampledError
/// when the window does not contain the integrand or the panels are too coarse.
QuadratureResult wigner_quadrature(const StateSpec &state, double x, double p, const QuadratureSpec &quad);

QuadratureSpec default_norm_quadrature(const StateSpec &state);

/// Int |psi(x)|^2 dx over [-y_halfwidth, y_halfwidth].
double norm_quadrature(const StateSpec &state, const QuadratureSpec &quad);

}  // namespace sowig
