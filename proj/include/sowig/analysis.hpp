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
#include <span>
#include <vector>

#include "sowig/states.hpp"
#include "sowig/wigner.hpp"

namespace sowig {

/// Measured and derived phase-space scales of one state.
struct ScaleReport {
    double L = 0.0;          ///< distance between the outermost components
    double P = 0.0;          ///< momentum extent; equal to L for the quarter-turn symmetric cross
    double a_Z = 0.0;        ///< h^2 / (L P)
    double alpha_est = 0.0;  ///< (h / 2L) / smallest central crossing spacing
    double a_SO_est = 0.0;   ///< (h / (L alpha_est)) (h / (P alpha_est))
    std::vector<double> crossing_spacings;
    double overspill_lhs = 0.0;  ///< NaN when not evaluated
    double overspill_rhs = 0.0;  ///< NaN when not evaluated
};

/// (h/P) (h/L).
double zurek_scale(double L, double P, const PhysicalConstants &constants);

enum class CutAxis {
    p_cut_at_x0,  ///< W(0, p)
    x_cut_at_p0,  ///< W(x, 0)
};

struct CutSpec {
    CutAxis axis = CutAxis::p_cut_at_x0;
    double window = 1.0;          ///< full width, centered on the origin
    std::size_t samples = 1024;   ///< endpoint-inclusive
    double expected_fringe = 0.0; ///< if > 0, at least 64 samples per fringe are required
};

struct CutProfile {
    std::vector<double> coords;
    std::vector<double> values;
};

CutProfile sample_cut(const MixtureSpec &source, const CutSpec &cut);

/// Sign changes of `values`, located by linear interpolation between the
/// bracketing samples. Exact zeros count once; a zero run that returns to the
/// same sign is a touch, not a crossing.
std::vector<double> find_crossings(std::span<const double> coords, std::span<const double> values);

/// Zero crossings of W along a cut through the origin. Throws AnalysisError
/// when fewer than two crossings fall inside the window.
std::vector<double> central_cut_crossings(const MixtureSpec &source, const CutSpec &cut);
std::vector<double> central_cut_crossings(const StateSpec &source, const CutSpec &cut);

/// Sub-Zurek scale estimate from crossing positions near the origin.
ScaleReport superosc_scale(std::span<const double> crossings, double L, double P, const PhysicalConstants &constants);

inline constexpr double kOverspillThreshold = 1e-3;

struct OverspillResult {
    double lhs = 0.0;    ///< W_{Phi-1}(0,0) + W_{Phi+1}(0,0)
    double rhs = 0.0;    ///< |W_Psi(0,0)|
    double ratio = 0.0;  ///< NaN when indeterminate
    bool indeterminate = false;
    bool satisfied = false;  ///< ratio < kOverspillThreshold
};

/// Compares the self-Wigner weight of the two components adjacent to the
/// central one against |W(0,0)| of the whole state. Warns when violated.
OverspillResult overspill_check(const StateSpec &state);

/// Normalized Moyal overlap between W and W displaced by (dx, dp). The
/// displacement moves the evaluation coordinates, not the buffer.
class DisplacementProbe {
   public:
    DisplacementProbe(MixtureSpec source, GridSpec grid, EvalOptions options = {});

    double operator()(double dx, double dp) const;
    double self_overlap() const { return self_overlap_; }
    const PhysicalConstants &constants() const { return source_.terms.front().state.constants; }

   private:
    MixtureSpec source_;
    GridSpec grid_;
    EvalOptions options_;
    PhaseSpaceGrid reference_;
    double self_overlap_ = 0.0;
};

double displacement_sensitivity(const MixtureSpec &source, double dx, double dp, const GridSpec &grid);

/// Smallest t > 0 with O(t * direction) <= 1/2, scanning in steps of `step` up
/// to `max_shift` and refining by bisection.
double half_overlap_displacement(const DisplacementProbe &probe, double dir_x, double dir_p, double step,
                                 double max_shift);

}  // namespace sowig
