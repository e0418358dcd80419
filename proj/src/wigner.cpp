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

#include "sowig/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "parallel.hpp"
#include "sowig/error.hpp"

namespace sowig {

Complex pair_kernel(const GaussianComponent &a, const GaussianComponent &b, double x, double p,
                    const PhysicalConstants &constants) {
    if (a.xi != b.xi) throw InvalidArgument("pair_kernel: components must share one width xi");
    const double xi = a.xi;
    const double hbar = constants.hbar;
    const double u = x - 0.5 * (a.center + b.center);
    const double mean_k = 0.5 * (a.momentum + b.momentum);
    const double q = p - mean_k;
    const double envelope = std::exp(-u * u / (xi * xi) - q * q * xi * xi / (hbar * hbar));
    const double phase =
        (q * (a.center - b.center) + (b.momentum - a.momentum) * x + a.momentum * a.center - b.momentum * b.center) /
        hbar;
    return std::conj(a.coeff) * b.coeff * std::polar(envelope / (kPi * hbar), phase);
}

double eval_wigner(const StateSpec &state, double x, double p) {
    state.common_xi();
    const auto &comps = state.components;
    double total = 0.0;
    for (std::size_t a = 0; a < comps.size(); ++a) {
        total += pair_kernel(comps[a], comps[a], x, p, state.constants).real();
        for (std::size_t b = a + 1; b < comps.size(); ++b) {
            total += 2.0 * pair_kernel(comps[a], comps[b], x, p, state.constants).real();
        }
    }
    return total;
}

Complex eval_wigner_ordered(const StateSpec &state, double x, double p) {
    state.common_xi();
    Complex total{0.0, 0.0};
    for (const auto &a : state.components) {
        for (const auto &b : state.components) total += pair_kernel(a, b, x, p, state.constants);
    }
    return total;
}

void validate(const MixtureSpec &mixture) {
    if (mixture.terms.empty()) throw InvalidArgument("mixture has no terms");
    double sum = 0.0;
    for (const auto &t : mixture.terms) {
        if (!std::isfinite(t.weight) || t.weight < 0.0) throw InvalidArgument("mixture weights must be >= 0");
        validate(t.state);
        sum += t.weight;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw InvalidArgument("mixture weights must sum to 1");
}

MixtureSpec as_mixture(const StateSpec &state) { return MixtureSpec{{MixtureTerm{state, 1.0, Rotation::identity}}}; }

MixtureSpec cross_state(const StateSpec &state) {
    return MixtureSpec{{MixtureTerm{state, 0.5, Rotation::identity}, MixtureTerm{state, 0.5, Rotation::quarter_turn}}};
}

double eval_mixture(const MixtureSpec &mixture, double x, double p) {
    double total = 0.0;
    for (const auto &t : mixture.terms) {
        const auto [xr, pr] = rotate(t.rotation, x, p);
        total += t.weight * eval_wigner(t.state, xr, pr);
    }
    return total;
}

void validate(const GridSpec &spec) {
    if (!std::isfinite(spec.x_min) || !std::isfinite(spec.x_max) || !std::isfinite(spec.p_min) ||
        !std::isfinite(spec.p_max)) {
        throw InvalidArgument("grid bounds must be finite");
    }
    if (!(spec.x_max > spec.x_min) || !(spec.p_max > spec.p_min)) {
        throw InvalidArgument("grid axes must have positive extent");
    }
    if (spec.nx < 2 || spec.np < 2) throw InvalidArgument("grid needs at least 2 samples per axis");
}

namespace {

// Factorized pair contribution: Re(row[i] * col[j]) for one term and one
// ordered pair (folded). Stored as split real/imaginary arrays.
struct PairFactors {
    std::vector<double> row_re, row_im;
    std::vector<double> col_re, col_im;
};

// x-dependent and p-dependent factors of the folded pair (a, b), fold = 1 or 2.
Complex x_factor(const GaussianComponent &a, const GaussianComponent &b, double x, double hbar) {
    const double u = x - 0.5 * (a.center + b.center);
    return std::polar(std::exp(-u * u / (a.xi * a.xi)), (b.momentum - a.momentum) * x / hbar);
}

Complex p_factor(const GaussianComponent &a, const GaussianComponent &b, double p, double hbar, double fold) {
    const double xi = a.xi;
    const double q = p - 0.5 * (a.momentum + b.momentum);
    const double phase = (q * (a.center - b.center) + a.momentum * a.center - b.momentum * b.center) / hbar;
    const Complex w = fold * std::conj(a.coeff) * b.coeff / (kPi * hbar);
    return w * std::polar(std::exp(-q * q * xi * xi / (hbar * hbar)), phase);
}

std::vector<PairFactors> build_factors(const MixtureTerm &term, const GridSpec &spec) {
    const auto &comps = term.state.components;
    const double hbar = term.state.constants.hbar;
    std::vector<PairFactors> out;
    out.reserve(comps.size() * (comps.size() + 1) / 2);
    for (std::size_t a = 0; a < comps.size(); ++a) {
        for (std::size_t b = a; b < comps.size(); ++b) {
            const double fold = (a == b ? 1.0 : 2.0) * term.weight;
            PairFactors f;
            f.row_re.resize(spec.nx);
            f.row_im.resize(spec.nx);
            f.col_re.resize(spec.np);
            f.col_im.resize(spec.np);
            for (std::size_t i = 0; i < spec.nx; ++i) {
                const double x = spec.x_at(i);
                // identity: x feeds the x factor; quarter turn: x plays the role of p.
                const Complex v = term.rotation == Rotation::identity ? x_factor(comps[a], comps[b], x, hbar)
                                                                      : p_factor(comps[a], comps[b], x, hbar, fold);
                f.row_re[i] = v.real();
                f.row_im[i] = v.imag();
            }
            for (std::size_t j = 0; j < spec.np; ++j) {
                const double p = spec.p_at(j);
                const Complex v = term.rotation == Rotation::identity ? p_factor(comps[a], comps[b], p, hbar, fold)
                                                                      : x_factor(comps[a], comps[b], -p, hbar);
                f.col_re[j] = v.real();
                f.col_im[j] = v.imag();
            }
            out.push_back(std::move(f));
        }
    }
    return out;
}

}  // namespace

PhaseSpaceGrid eval_grid(const MixtureSpec &mixture, const GridSpec &spec, const EvalOptions &options) {
    validate(spec);
    validate(mixture);
    PhaseSpaceGrid grid{spec, std::vector<double>(spec.nx * spec.np, 0.0)};

    if (options.method == GridMethod::pointwise) {
        detail::parallel_rows(spec.nx, options.workers, [&](std::size_t i) {
            const double x = spec.x_at(i);
            for (std::size_t j = 0; j < spec.np; ++j) grid.values[i * spec.np + j] = eval_mixture(mixture, x, spec.p_at(j));
        });
        return grid;
    }

    std::vector<std::vector<PairFactors>> factors;
    factors.reserve(mixture.terms.size());
    for (const auto &t : mixture.terms) factors.push_back(build_factors(t, spec));

    detail::parallel_rows(spec.nx, options.workers, [&](std::size_t i) {
        double *row = grid.values.data() + i * spec.np;
        for (const auto &term : factors) {
            for (const auto &f : term) {
                const double sr = f.row_re[i];
                const double si = f.row_im[i];
                if (sr == 0.0 && si == 0.0) continue;
                const double *cr = f.col_re.data();
                const double *ci = f.col_im.data();
                for (std::size_t j = 0; j < spec.np; ++j) row[j] += sr * cr[j] - si * ci[j];
            }
        }
    });
    return grid;
}

PhaseSpaceGrid eval_grid(const StateSpec &state, const GridSpec &spec, const EvalOptions &options) {
    return eval_grid(as_mixture(state), spec, options);
}

namespace {

constexpr double kEdgeTolerance = 1e-12;

double trapezoid_weight(std::size_t i, std::size_t n, double step) {
    return (i == 0 || i + 1 == n) ? 0.5 * step : step;
}

double max_abs(const std::vector<double> &values) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace

double edge_fraction(const PhaseSpaceGrid &grid) {
    const auto &s = grid.spec;
    const double peak = max_abs(grid.values);
    if (peak == 0.0) return 0.0;
    double edge = 0.0;
    for (std::size_t i = 0; i < s.nx; ++i) {
        edge = std::max({edge, std::abs(grid.at(i, 0)), std::abs(grid.at(i, s.np - 1))});
    }
    for (std::size_t j = 0; j < s.np; ++j) {
        edge = std::max({edge, std::abs(grid.at(0, j)), std::abs(grid.at(s.nx - 1, j))});
    }
    return edge / peak;
}

std::vector<double> marginal_x(const PhaseSpaceGrid &grid) {
    const auto &s = grid.spec;
    validate(s);
    const double peak = max_abs(grid.values);
    double edge = 0.0;
    for (std::size_t i = 0; i < s.nx; ++i) edge = std::max({edge, std::abs(grid.at(i, 0)), std::abs(grid.at(i, s.np - 1))});
    if (peak > 0.0 && edge > kEdgeTolerance * peak) {
        std::ostringstream os;
        os << "p window too narrow for the marginal: edge/peak = " << edge / peak;
        throw UndersampledError(os.str());
    }
    std::vector<double> out(s.nx, 0.0);
    const double dp = s.dp();
    for (std::size_t i = 0; i < s.nx; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < s.np; ++j) sum += trapezoid_weight(j, s.np, dp) * grid.at(i, j);
        out[i] = sum;
    }
    return out;
}

double total_integral(const PhaseSpaceGrid &grid) {
    const auto &s = grid.spec;
    validate(s);
    double total = 0.0;
    for (std::size_t i = 0; i < s.nx; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < s.np; ++j) row += trapezoid_weight(j, s.np, s.dp()) * grid.at(i, j);
        total += trapezoid_weight(i, s.nx, s.dx()) * row;
    }
    return total;
}

double overlap(const PhaseSpaceGrid &a, const PhaseSpaceGrid &b, const PhysicalConstants &constants) {
    validate(constants);
    if (!(a.spec == b.spec) || a.values.size() != b.values.size()) {
        throw InvalidArgument("overlap: the two grids do not share one lattice");
    }
    for (const auto *g : {&a, &b}) {
        const double f = edge_fraction(*g);
        if (f > kEdgeTolerance) {
            std::ostringstream os;
            os << "overlap: window does not contain the distribution (edge/peak = " << f << ")";
            throw UndersampledError(os.str());
        }
    }
    const auto &s = a.spec;
    double total = 0.0;
    for (std::size_t i = 0; i < s.nx; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < s.np; ++j) row += trapezoid_weight(j, s.np, s.dp()) * a.at(i, j) * b.at(i, j);
        total += trapezoid_weight(i, s.nx, s.dx()) * row;
    }
    return constants.h() * total;
}

GridSpec integration_grid(const MixtureSpec &mixture, double margin) {
    validate(mixture);
    // e^{-6.5^2} ~ 5e-19: envelope cut-off in units of the Gaussian widths.
    constexpr double kReach = 6.5;
    // Products of two envelopes e^{-2u^2/w^2} have spectra below 1e-16 beyond 17.2/w.
    constexpr double kBand = 17.2;

    double x_lo = INFINITY, x_hi = -INFINITY, p_lo = INFINITY, p_hi = -INFINITY;
    double omega_x = 0.0, omega_p = 0.0;
    for (const auto &t : mixture.terms) {
        const auto &comps = t.state.components;
        const double xi = t.state.common_xi();
        const double hbar = t.state.constants.hbar;
        double c_lo = INFINITY, c_hi = -INFINITY, k_lo = INFINITY, k_hi = -INFINITY;
        for (const auto &c : comps) {
            c_lo = std::min(c_lo, c.center);
            c_hi = std::max(c_hi, c.center);
            k_lo = std::min(k_lo, c.momentum);
            k_hi = std::max(k_hi, c.momentum);
        }
        // Box and bandwidths in the state's own (x, p) frame.
        const double bx_lo = c_lo - kReach * xi, bx_hi = c_hi + kReach * xi;
        const double bp_lo = k_lo - kReach * hbar / xi, bp_hi = k_hi + kReach * hbar / xi;
        const double wx = 2.0 * (k_hi - k_lo) / hbar + kBand / xi;
        const double wp = 2.0 * (c_hi - c_lo) / hbar + kBand * xi / hbar;
        if (t.rotation == Rotation::identity) {
            x_lo = std::min(x_lo, bx_lo);
            x_hi = std::max(x_hi, bx_hi);
            p_lo = std::min(p_lo, bp_lo);
            p_hi = std::max(p_hi, bp_hi);
            omega_x = std::max(omega_x, wx);
            omega_p = std::max(omega_p, wp);
        } else {
            // Sample (x, p) reads the state at (-p, x).
            x_lo = std::min(x_lo, bp_lo);
            x_hi = std::max(x_hi, bp_hi);
            p_lo = std::min(p_lo, -bx_hi);
            p_hi = std::max(p_hi, -bx_lo);
            omega_x = std::max(omega_x, wp);
            omega_p = std::max(omega_p, wx);
        }
    }
    GridSpec spec;
    spec.x_min = x_lo - margin;
    spec.x_max = x_hi + margin;
    spec.p_min = p_lo - margin;
    spec.p_max = p_hi + margin;
    auto samples = [](double extent, double omega) {
        const double step = 2.0 * kPi / omega;
        return std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil(extent / step)) + 1);
    };
    spec.nx = samples(spec.x_max - spec.x_min, omega_x);
    spec.np = samples(spec.p_max - spec.p_min, omega_p);
    return spec;
}

}  // namespace sowig
