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

#include "sowig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sowig/error.hpp"

namespace sowig {

namespace {

struct Extents {
    double max_center = 0.0;
    double max_momentum = 0.0;
};

Extents extents_of(const StateSpec &state) {
    Extents e;
    for (const auto &c : state.components) {
        e.max_center = std::max(e.max_center, std::abs(c.center));
        e.max_momentum = std::max(e.max_momentum, std::abs(c.momentum));
    }
    return e;
}

std::size_t panels_for_rate(double halfwidth, double rate) {
    auto n = static_cast<std::size_t>(std::ceil(16.0 * halfwidth * rate / kPi));
    n = std::max<std::size_t>(n, 2);
    return n + (n % 2);
}

}  // namespace

std::size_t required_wigner_panels(const StateSpec &state, double p, double y_halfwidth) {
    validate(state);
    const double xi = state.common_xi();
    const double hbar = state.constants.hbar;
    const Extents e = extents_of(state);
    const double rate = 2.0 * std::abs(p) / hbar + 2.0 * e.max_momentum / hbar + 2.0 / xi;
    return panels_for_rate(y_halfwidth, rate);
}

QuadratureSpec default_wigner_quadrature(const StateSpec &state, double p) {
    validate(state);
    const double y = extents_of(state).max_center + 8.0 * state.common_xi();
    return {y, required_wigner_panels(state, p, y)};
}

QuadratureResult wigner_quadrature(const StateSpec &state, double x, double p, const QuadratureSpec &quad) {
    validate(state);
    if (!(quad.y_halfwidth > 0.0)) throw InvalidArgument("quadrature half-width must be positive");
    const std::size_t needed = required_wigner_panels(state, p, quad.y_halfwidth);
    if (quad.n_points < needed || quad.n_points % 2 != 0) {
        std::ostringstream os;
        os << "wigner_quadrature: " << quad.n_points << " panels, need an even count >= " << needed;
        throw UndersampledError(os.str());
    }
    const double hbar = state.constants.hbar;
    const double scale = 1.0 / (kPi * hbar);
    double peak = 0.0;
    auto integrand = [&](double y) {
        const Complex v = std::conj(eval_psi(state, x + y)) * eval_psi(state, x - y) * std::polar(scale, 2.0 * p * y / hbar);
        peak = std::max(peak, std::abs(v));
        return v;
    };
    const Complex total = simpson<Complex>(integrand, -quad.y_halfwidth, quad.y_halfwidth, quad.n_points);
    // W is bounded by 1/(pi hbar), which sets the floor of the relative test.
    const double edge = std::max(std::abs(integrand(-quad.y_halfwidth)), std::abs(integrand(quad.y_halfwidth)));
    if (edge > 1e-16 * std::max(peak, scale)) {
        std::ostringstream os;
        os << "wigner_quadrature: window half-width " << quad.y_halfwidth
           << " does not contain the integrand (edge/peak = " << edge / peak << ")";
        throw UndersampledError(os.str());
    }
    return {total.real(), total.imag()};
}

QuadratureSpec default_norm_quadrature(const StateSpec &state) {
    validate(state);
    const double xi = state.common_xi();
    const Extents e = extents_of(state);
    const double y = e.max_center + 8.0 * xi;
    return {y, panels_for_rate(y, 4.0 * e.max_momentum / state.constants.hbar + 2.0 / xi)};
}

double norm_quadrature(const StateSpec &state, const QuadratureSpec &quad) {
    validate(state);
    const double xi = state.common_xi();
    const Extents e = extents_of(state);
    if (quad.y_halfwidth < e.max_center + 8.0 * xi) {
        throw UndersampledError("norm_quadrature: window must cover every component +-8 xi");
    }
    const std::size_t needed = panels_for_rate(quad.y_halfwidth, 4.0 * e.max_momentum / state.constants.hbar + 2.0 / xi);
    if (quad.n_points < needed || quad.n_points % 2 != 0) {
        std::ostringstream os;
        os << "norm_quadrature: " << quad.n_points << " panels, need an even count >= " << needed;
        throw UndersampledError(os.str());
    }
    return simpson<double>([&](double x) { return std::norm(eval_psi(state, x)); }, -quad.y_halfwidth,
                           quad.y_halfwidth, quad.n_points);
}

}  // namespace sowig
