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

// Scenario configuration shared by the command-line tool, the Python module
// and the acceptance suite: figure presets, config-file resolution, default
// lattices, and the analyze / validate / sensitivity drivers.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sowig/analysis.hpp"
#include "sowig/export.hpp"
#include "sowig/kvtext.hpp"
#include "sowig/states.hpp"
#include "sowig/wigner.hpp"

namespace sowig {

enum class Preset { fig1, fig2a, fig2b, fig2c, cat, custom };
enum class SourceKind { pure, cross };
enum class WindowKind {
    central,  ///< [-h/L, h/L] in both axes, resolving the superoscillatory fringe
    full,     ///< the whole support, resolving ordinary interference fringes h/(2L)
};

Preset parse_preset(std::string_view name);
std::string preset_name(Preset preset);

struct ScenarioConfig {
    Preset preset = Preset::custom;
    int n = 8;
    double alpha = 10.0;
    double xi = 0.25;
    double delta_x = 3.0;
    double hbar = 1.0;
    SourceKind source = SourceKind::pure;
    WindowKind window = WindowKind::central;
    std::optional<GridSpec> grid;
    std::optional<CutAxis> cut;
    std::size_t cut_samples = 1024;
    std::vector<std::string> formats{"csv"};
    ValueMap map = ValueMap::linear;
    int pgm_bits = 8;
    std::string out;
    bool allow_undersampled = false;

    PhysicalConstants constants() const { return {hbar}; }
    bool is_cat() const { return preset == Preset::cat; }
};

/// Parameter sets of the figure presets: fig1 N=8 alpha=10 xi=1/4 dx=3 (pure);
/// fig2a N=4 alpha=6 xi=1 dx=6, fig2b/fig2c N=12 xi=1/4 dx=3 alpha=10/16
/// (cross-states); cat dx=3 xi=1.
ScenarioConfig preset_config(Preset preset);

/// Applies config-file keys (names mirror the long flags: n, alpha, xi, delta-x,
/// hbar, preset, source, window, grid, cut, cut-samples, format, map, pgm-bits,
/// out, allow-undersampled). A `preset` key is applied first.
void apply_kv(ScenarioConfig &config, const KvDocument &doc);

/// Fully resolved configuration, echoed into output headers.
KvDocument to_kv(const ScenarioConfig &config);

/// "x0:x1:nx,p0:p1:np".
GridSpec parse_grid(std::string_view text);
std::string format_grid(const GridSpec &grid);

/// The pure state of the scenario (cat or superoscillating Psi), normalized.
StateSpec build_state(const ScenarioConfig &config);
/// The pure state, or its cross-state when source = cross.
MixtureSpec build_source(const ScenarioConfig &config);

/// L: outermost component distance (N dx, or 2 dx for the cat).
double structure_length(const ScenarioConfig &config);
/// Effective superoscillation factor (1 for the cat).
double effective_alpha(const ScenarioConfig &config);
/// Finest fringe expected inside a window: h/(2 L alpha) for central windows,
/// h/(2L) otherwise.
double expected_fringe(const ScenarioConfig &config, const GridSpec &grid);

GridSpec default_grid(const ScenarioConfig &config);
/// Throws UndersampledError unless the grid has >= 8 samples per expected
/// fringe along p (and along x for cross-states).
void check_resolution(const ScenarioConfig &config, const GridSpec &grid);

CutSpec default_cut(const ScenarioConfig &config);

/// Crossings of the pure state's central p-cut, scale estimates, and the
/// overspill check (skipped for the cat).
struct AnalysisResult {
    ScaleReport report;
    std::optional<OverspillResult> overspill;
    std::vector<std::string> notes;
};
AnalysisResult analyze_scenario(const ScenarioConfig &config);

struct GateResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};
struct ValidationReport {
    std::vector<GateResult> gates;
    bool all_passed() const;
};

/// Oracle gates on the scenario's pure state: closed form vs quadrature at
/// `points` seeded random points, marginal identity, norm, total integral.
ValidationReport validate_scenario(const ScenarioConfig &config, std::size_t points = 50,
                                   unsigned long long seed = 0x5eedULL);

struct SensitivityComparison {
    double source_half = 0.0;   ///< half-overlap displacement of the scenario source
    double compass_half = 0.0;  ///< same for the compass state with L = P
    double ratio = 0.0;         ///< source_half / compass_half
};

/// Half-overlap displacement along (dir_x, dir_p) of the scenario source and of
/// the compass reference of equal extent.
SensitivityComparison compare_with_compass(const ScenarioConfig &config, double dir_x = 0.0, double dir_p = 1.0);

}  // namespace sowig
