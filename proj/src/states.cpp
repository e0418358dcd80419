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

#include "sowig/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sowig/diag.hpp"
#include "sowig/error.hpp"

namespace sowig {

double StateSpec::common_xi() const {
    if (components.empty()) throw InvalidArgument("state has no components");
    const double xi = components.front().xi;
    for (const auto &c : components) {
        if (c.xi != xi) throw InvalidArgument("all components of a state must share one squeezing width xi");
    }
    return xi;
}

void validate(const StateSpec &state) {
    validate(state.constants);
    if (state.components.empty()) throw InvalidArgument("state has no components");
    for (const auto &c : state.components) {
        if (!std::isfinite(c.xi) || c.xi <= 0.0) throw InvalidArgument("component width xi must be positive");
        if (!std::isfinite(c.center) || !std::isfinite(c.momentum) || !std::isfinite(c.coeff.real()) ||
            !std::isfinite(c.coeff.imag())) {
            throw InvalidArgument("component parameters must be finite");
        }
    }
    state.common_xi();
}

namespace {

// <phi_a|phi_b> for unit-coefficient components of equal width.
Complex component_overlap(const GaussianComponent &a, const GaussianComponent &b, double xi, double hbar) {
    const double dx = a.center - b.center;
    const double dk = b.momentum - a.momentum;
    const double mean_k = 0.5 * (a.momentum + b.momentum);
    const double magnitude = std::exp(-dx * dx / (4.0 * xi * xi) - dk * dk * xi * xi / (4.0 * hbar * hbar));
    return std::polar(magnitude, mean_k * dx / hbar);
}

void require_width(double xi) {
    if (!std::isfinite(xi) || xi <= 0.0) throw InvalidArgument("xi must be finite and positive");
}

}  // namespace

double norm_squared(const StateSpec &state) {
    validate(state);
    const double xi = state.common_xi();
    Complex total{0.0, 0.0};
    for (const auto &a : state.components) {
        for (const auto &b : state.components) {
            total += std::conj(a.coeff) * b.coeff * component_overlap(a, b, xi, state.constants.hbar);
        }
    }
    return total.real();
}

StateSpec normalize(StateSpec state) {
    const double norm2 = norm_squared(state);
    if (!(norm2 > 0.0)) throw InvalidArgument("cannot normalize a state of zero norm");
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto &c : state.components) c.coeff *= scale;
    state.normalized = true;
    return state;
}

StateSpec build_gaussian(double center, double xi, const PhysicalConstants &constants) {
    validate(constants);
    require_width(xi);
    StateSpec state;
    state.constants = constants;
    state.components.push_back({center, xi, {1.0, 0.0}, 0.0});
    state.normalized = true;
    return state;
}

StateSpec build_cat(double delta_x, double xi, const PhysicalConstants &constants, Normalization normalization) {
    validate(constants);
    require_width(xi);
    if (!std::isfinite(delta_x)) throw InvalidArgument("delta_x must be finite");
    const double w = 1.0 / std::sqrt(2.0);
    StateSpec state;
    state.constants = constants;
    state.components = {{-delta_x, xi, {w, 0.0}, 0.0}, {delta_x, xi, {w, 0.0}, 0.0}};
    return normalization == Normalization::unit ? normalize(std::move(state)) : state;
}

StateSpec build_psi(const SuperoscParams &params, double delta_x, double xi, const PhysicalConstants &constants,
                    Normalization normalization) {
    validate(constants);
    require_width(xi);
    if (!std::isfinite(delta_x) || delta_x <= 0.0) throw InvalidArgument("delta_x must be finite and positive");
    const CoeffTable table = fourier_coeffs(params);
    const int half = params.n / 2;
    if (half % 2 != 0) {
        std::ostringstream os;
        os << "N/2 = " << half << " is odd: the central interference fringe carries the opposite sign to Re f";
        warn(os.str());
    }

    // (-i)^j for j >= 0 cycles through 1, -i, -1, i.
    static constexpr Complex kMinusIPowers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    StateSpec state;
    state.constants = constants;
    state.components.reserve(params.n + 1);
    for (int j = -half; j <= half; ++j) {
        const int m = std::abs(j);
        Complex coeff{table.k[m], 0.0};
        if (j != 0) {
            const Complex phase = j > 0 ? kMinusIPowers[m % 4] : std::conj(kMinusIPowers[m % 4]);
            coeff = phase * table.k[m] * inv_sqrt2;
        }
        state.components.push_back({j * delta_x, xi, coeff, 0.0});
    }
    return normalization == Normalization::unit ? normalize(std::move(state)) : state;
}

StateSpec build_compass(double extent_x, double extent_p, double xi, const PhysicalConstants &constants,
                        Normalization normalization) {
    validate(constants);
    require_width(xi);
    if (!(extent_x > 0.0) || !(extent_p > 0.0) || !std::isfinite(extent_x) || !std::isfinite(extent_p)) {
        throw InvalidArgument("compass extents must be finite and positive");
    }
    StateSpec state;
    state.constants = constants;
    const Complex w{0.5, 0.0};
    state.components = {{-extent_x / 2, xi, w, 0.0},
                        {extent_x / 2, xi, w, 0.0},
                        {0.0, xi, w, -extent_p / 2},
                        {0.0, xi, w, extent_p / 2}};
    return normalization == Normalization::unit ? normalize(std::move(state)) : state;
}

Complex eval_psi(const StateSpec &state, double x) {
    Complex total{0.0, 0.0};
    const double hbar = state.constants.hbar;
    for (const auto &c : state.components) {
        const double u = x - c.center;
        const double amplitude = std::pow(kPi * c.xi * c.xi, -0.25) * std::exp(-u * u / (2.0 * c.xi * c.xi));
        total += c.coeff * (c.momentum == 0.0 ? Complex{amplitude, 0.0} : std::polar(amplitude, c.momentum * u / hbar));
    }
    return total;
}

double position_extent(const StateSpec &state) {
    if (state.components.empty()) throw InvalidArgument("state has no components");
    const auto [lo, hi] = std::minmax_element(state.components.begin(), state.components.end(),
                                              [](const auto &a, const auto &b) { return a.center < b.center; });
    return hi->center - lo->center;
}

}  // namespace sowig
