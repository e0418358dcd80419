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

#include <cstddef>
#include <utility>
#include <vector>

#include "sowig/states.hpp"
#include "sowig/types.hpp"

namespace sowig {

/// Contribution of the ordered component pair (a, b) to W(x, p):
///
///   conj(c_a) c_b / (pi hbar) exp(-(x - m)^2 / xi^2 - (p - kbar)^2 xi^2 / hbar^2)
///     * exp(i [(p - kbar)(a - b) + (k_b - k_a) x + k_a a - k_b b] / hbar)
///
/// with m = (a + b)/2 and kbar = (k_a + k_b)/2 (k = component momentum). This is
/// the Wigner transform (1/pi hbar) Int phi_a*(x+y) phi_b(x-y) e^{2ipy/hbar} dy;
/// see docs/kernel.md. kernel(a, b) = conj(kernel(b, a)).
Complex pair_kernel(const GaussianComponent &a, const GaussianComponent &b, double x, double p,
                    const PhysicalConstants &constants);

/// W(x, p) of a pure state: diagonal pairs plus twice the real part of each
/// off-diagonal pair with a < b.
double eval_wigner(const StateSpec &state, double x, double p);

/// The full ordered-pair sum without the Hermitian fold; its imaginary part is
/// roundoff only.
Complex eval_wigner_ordered(const StateSpec &state, double x, double p);

enum class Rotation {
    identity,
    quarter_turn,  ///< term evaluated at (-p, x)
};

/// Coordinates at which a term with the given rotation samples its state.
inline std::pair<double, double> rotate(Rotation rotation, double x, double p) {
    return rotation == Rotation::identity ? std::pair{x, p} : std::pair{-p, x};
}

struct MixtureTerm {
    StateSpec state;
    double weight = 1.0;
    Rotation rotation = Rotation::identity;
};

/// Incoherent mixture sum_t weight_t W_t(rotate_t(x, p)).
struct MixtureSpec {
    std::vector<MixtureTerm> terms;
};

void validate(const MixtureSpec &mixture);

MixtureSpec as_mixture(const StateSpec &state);

/// [W(x, p) + W(-p, x)] / 2.
MixtureSpec cross_state(const StateSpec &state);

double eval_mixture(const MixtureSpec &mixture, double x, double p);

/// Endpoint-inclusive uniform lattice. Sample (i, j) sits at
/// x = x_min + i (x_max - x_min)/(nx - 1), p = p_min + j (p_max - p_min)/(np - 1).
struct GridSpec {
    double x_min = -1.0;
    double x_max = 1.0;
    double p_min = -1.0;
    double p_max = 1.0;
    std::size_t nx = 2;
    std::size_t np = 2;

    double dx() const { return (x_max - x_min) / static_cast<double>(nx - 1); }
    double dp() const { return (p_max - p_min) / static_cast<double>(np - 1); }
    double x_at(std::size_t i) const { return x_min + static_cast<double>(i) * dx(); }
    double p_at(std::size_t j) const { return p_min + static_cast<double>(j) * dp(); }

    bool operator==(const GridSpec &) const = default;
};

void validate(const GridSpec &spec);

/// Lattice plus row-major values: values[i * np + j] = W(x_i, p_j).
struct PhaseSpaceGrid {
    GridSpec spec;
    std::vector<double> values;

    double at(std::size_t i, std::size_t j) const { return values[i * spec.np + j]; }
};

enum class GridMethod {
    separable,  ///< per-pair x and p factors combined as rank-1 outer products
    pointwise,  ///< eval_mixture at every sample
};

struct EvalOptions {
    GridMethod method = GridMethod::separable;
    unsigned workers = 0;  ///< 0 = hardware concurrency; output does not depend on it
};

PhaseSpaceGrid eval_grid(const MixtureSpec &mixture, const GridSpec &spec, const EvalOptions &options = {});
PhaseSpaceGrid eval_grid(const StateSpec &state, const GridSpec &spec, const EvalOptions &options = {});

/// Trapezoidal integral over p for every x column. Throws UndersampledError
/// when the p edges of the window still carry weight.
std::vector<double> marginal_x(const PhaseSpaceGrid &grid);

/// Trapezoidal double integral of the values.
double total_integral(const PhaseSpaceGrid &grid);

/// Moyal overlap 2 pi hbar IntInt W_a W_b on a shared lattice.
double overlap(const PhaseSpaceGrid &a, const PhaseSpaceGrid &b, const PhysicalConstants &constants);

/// Largest |value| on the lattice edges relative to the largest |value| overall.
double edge_fraction(const PhaseSpaceGrid &grid);

/// A lattice covering the whole mixture (envelopes below ~1e-18 at the edges,
/// widened by `margin` on every side) fine enough that trapezoidal integrals of
/// W and of products of two such distributions are accurate to roundoff.
GridSpec integration_grid(const MixtureSpec &mixture, double margin = 0.0);

}  // namespace sowig
