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

#include "sowig/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sowig/diag.hpp"
#include "sowig/error.hpp"

namespace sowig {

double zurek_scale(double L, double P, const PhysicalConstants &constants) {
    validate(constants);
    if (!(L > 0.0) || !(P > 0.0) || !std::isfinite(L) || !std::isfinite(P)) {
        throw InvalidArgument("zurek_scale: extents must be finite and positive");
    }
    const double h = constants.h();
    return (h / P) * (h / L);
}

CutProfile sample_cut(const MixtureSpec &source, const CutSpec &cut) {
    validate(source);
    if (!(cut.window > 0.0) || !std::isfinite(cut.window)) throw InvalidArgument("cut window must be positive");
    if (cut.samples < 2) throw InvalidArgument("cut needs at least 2 samples");
    if (cut.expected_fringe > 0.0) {
        const double per_fringe = cut.expected_fringe * static_cast<double>(cut.samples - 1) / cut.window;
        if (per_fringe < 64.0) {
            std::ostringstream os;
            os << "cut resolves the expected fringe " << cut.expected_fringe << " with " << per_fringe
               << " samples, need >= 64";
            throw UndersampledError(os.str());
        }
    }
    CutProfile profile;
    profile.coords.resize(cut.samples);
    profile.values.resize(cut.samples);
    const double lo = -cut.window / 2.0;
    const double step = cut.window / static_cast<double>(cut.samples - 1);
    for (std::size_t k = 0; k < cut.samples; ++k) {
        const double t = lo + static_cast<double>(k) * step;
        profile.coords[k] = t;
        profile.values[k] = cut.axis == CutAxis::p_cut_at_x0 ? eval_mixture(source, 0.0, t) : eval_mixture(source, t, 0.0);
    }
    return profile;
}

std::vector<double> find_crossings(std::span<const double> coords, std::span<const double> values) {
    if (coords.size() != values.size()) throw InvalidArgument("find_crossings: size mismatch");
    std::vector<double> out;
    std::size_t last = values.size();  // index of the last nonzero sample
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] == 0.0) continue;
        if (last != values.size() && std::signbit(values[k]) != std::signbit(values[last])) {
            if (k == last + 1) {
                const double a = values[last], b = values[k];
                out.push_back(coords[last] + (coords[k] - coords[last]) * a / (a - b));
            } else {
                out.push_back(0.5 * (coords[last + 1] + coords[k - 1]));
            }
        }
        last = k;
    }
    return out;
}

std::vector<double> central_cut_crossings(const MixtureSpec &source, const CutSpec &cut) {
    const CutProfile profile = sample_cut(source, cut);
    auto crossings = find_crossings(profile.coords, profile.values);
    if (crossings.size() < 2) {
        std::ostringstream os;
        os << "cut window " << cut.window << " contains " << crossings.size() << " zero crossings, need >= 2";
        throw AnalysisError(os.str());
    }
    return crossings;
}

std::vector<double> central_cut_crossings(const StateSpec &source, const CutSpec &cut) {
    return central_cut_crossings(as_mixture(source), cut);
}

ScaleReport superosc_scale(std::span<const double> crossings, double L, double P, const PhysicalConstants &constants) {
    ScaleReport report;
    report.L = L;
    report.P = P;
    report.a_Z = zurek_scale(L, P, constants);
    report.overspill_lhs = std::numeric_limits<double>::quiet_NaN();
    report.overspill_rhs = std::numeric_limits<double>::quiet_NaN();
    if (crossings.size() < 2) throw AnalysisError("superosc_scale: need at least 2 crossings");
    std::vector<double> sorted(crossings.begin(), crossings.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 1; k < sorted.size(); ++k) {
        const double gap = sorted[k] - sorted[k - 1];
        if (!(gap > 0.0)) throw AnalysisError("superosc_scale: coincident crossings");
        report.crossing_spacings.push_back(gap);
    }
    const double smallest = *std::min_element(report.crossing_spacings.begin(), report.crossing_spacings.end());
    const double h = constants.h();
    report.alpha_est = (h / (2.0 * L)) / smallest;
    report.a_SO_est = (h / (L * report.alpha_est)) * (h / (P * report.alpha_est));
    return report;
}

OverspillResult overspill_check(const StateSpec &state) {
    validate(state);
    const auto &comps = state.components;
    std::size_t central = 0;
    for (std::size_t k = 1; k < comps.size(); ++k) {
        if (std::abs(comps[k].center) < std::abs(comps[central].center)) central = k;
    }
    const double c0 = comps[central].center;
    const GaussianComponent *left = nullptr;
    const GaussianComponent *right = nullptr;
    for (const auto &c : comps) {
        if (c.center < c0 && (!left || c.center > left->center)) left = &c;
        if (c.center > c0 && (!right || c.center < right->center)) right = &c;
    }
    if (!left || !right) {
        throw InvalidArgument("overspill_check: needs components on both sides of the central one");
    }
    OverspillResult r;
    r.lhs = pair_kernel(*left, *left, 0.0, 0.0, state.constants).real() +
            pair_kernel(*right, *right, 0.0, 0.0, state.constants).real();
    r.rhs = std::abs(eval_wigner(state, 0.0, 0.0));
    if (r.rhs < 1e-280) {
        r.indeterminate = true;
        r.ratio = std::numeric_limits<double>::quiet_NaN();
        warn("overspill check indeterminate: |W(0,0)| is below 1e-280");
        return r;
    }
    r.ratio = r.lhs / r.rhs;
    r.satisfied = r.ratio < kOverspillThreshold;
    if (!r.satisfied) {
        std::ostringstream os;
        os << "overspill condition violated: adjacent-component weight / |W(0,0)| = " << r.ratio;
        warn(os.str());
    }
    return r;
}

DisplacementProbe::DisplacementProbe(MixtureSpec source, GridSpec grid, EvalOptions options)
    : source_(std::move(source)), grid_(grid), options_(options) {
    validate(source_);
    reference_ = eval_grid(source_, grid_, options_);
    self_overlap_ = overlap(reference_, reference_, constants());
}

double DisplacementProbe::operator()(double dx, double dp) const {
    GridSpec shifted = grid_;
    shifted.x_min -= dx;
    shifted.x_max -= dx;
    shifted.p_min -= dp;
    shifted.p_max -= dp;
    PhaseSpaceGrid moved = eval_grid(source_, shifted, options_);
    moved.spec = grid_;  // sample (i, j) holds W(x_i - dx, p_j - dp)
    return overlap(reference_, moved, constants()) / self_overlap_;
}

double displacement_sensitivity(const MixtureSpec &source, double dx, double dp, const GridSpec &grid) {
    return DisplacementProbe(source, grid)(dx, dp);
}

double half_overlap_displacement(const DisplacementProbe &probe, double dir_x, double dir_p, double step,
                                 double max_shift) {
    const double norm = std::hypot(dir_x, dir_p);
    if (!(norm > 0.0) || !(step > 0.0) || !(max_shift > step)) {
        throw InvalidArgument("half_overlap_displacement: bad direction or scan range");
    }
    const double ux = dir_x / norm, up = dir_p / norm;
    auto value = [&](double t) { return probe(t * ux, t * up); };
    double prev = 0.0;
    for (double t = step; t <= max_shift; t += step) {
        if (value(t) <= 0.5) {
            double lo = prev, hi = t;
            for (int it = 0; it < 60 && hi - lo > 1e-12 * hi; ++it) {
                const double mid = 0.5 * (lo + hi);
                (value(mid) <= 0.5 ? hi : lo) = mid;
            }
            return hi;
        }
        prev = t;
    }
    std::ostringstream os;
    os << "overlap stays above 1/2 up to a displacement of " << max_shift;
    throw AnalysisError(os.str());
}

}  // namespace sowig
