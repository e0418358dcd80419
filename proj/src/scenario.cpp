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

#include "sowig/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "sowig/error.hpp"
#include "sowig/oracle.hpp"

namespace sowig {

Preset parse_preset(std::string_view name) {
    if (name == "fig1") return Preset::fig1;
    if (name == "fig2a") return Preset::fig2a;
    if (name == "fig2b") return Preset::fig2b;
    if (name == "fig2c") return Preset::fig2c;
    if (name == "cat") return Preset::cat;
    if (name == "custom") return Preset::custom;
    throw InvalidArgument("unknown preset '" + std::string(name) + "' (fig1|fig2a|fig2b|fig2c|cat|custom)");
}

std::string preset_name(Preset preset) {
    switch (preset) {
        case Preset::fig1: return "fig1";
        case Preset::fig2a: return "fig2a";
        case Preset::fig2b: return "fig2b";
        case Preset::fig2c: return "fig2c";
        case Preset::cat: return "cat";
        case Preset::custom: return "custom";
    }
    return "custom";
}

ScenarioConfig preset_config(Preset preset) {
    ScenarioConfig c;
    c.preset = preset;
    switch (preset) {
        case Preset::fig1:
        case Preset::custom:
            break;
        case Preset::fig2a:
            c.n = 4;
            c.alpha = 6.0;
            c.xi = 1.0;
            c.delta_x = 6.0;
            c.source = SourceKind::cross;
            c.window = WindowKind::full;
            break;
        case Preset::fig2b:
        case Preset::fig2c:
            c.n = 12;
            c.alpha = preset == Preset::fig2b ? 10.0 : 16.0;
            c.xi = 0.25;
            c.delta_x = 3.0;
            c.source = SourceKind::cross;
            break;
        case Preset::cat:
            c.n = 2;
            c.alpha = 1.0;
            c.xi = 1.0;
            c.delta_x = 3.0;
            c.window = WindowKind::full;
            break;
    }
    return c;
}

namespace {

int parse_int(std::string_view text, std::string_view what) {
    const double v = parse_real(text);
    if (v != std::floor(v) || std::abs(v) > 1e9) throw InvalidArgument(std::string(what) + " must be an integer");
    return static_cast<int>(v);
}

bool parse_bool(std::string_view text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw InvalidArgument("expected a boolean, got '" + std::string(text) + "'");
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string item(text.substr(0, comma));
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        if (!item.empty()) out.push_back(item);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    }
    return out;
}

}  // namespace

void apply_kv(ScenarioConfig &config, const KvDocument &doc) {
    if (auto p = doc.get("preset")) config = preset_config(parse_preset(*p));
    for (const auto &[key, value] : doc.entries()) {
        if (key == "preset") continue;
        if (key == "n") {
            config.n = parse_int(value, "n");
        } else if (key == "alpha") {
            config.alpha = parse_real(value);
        } else if (key == "xi") {
            config.xi = parse_real(value);
        } else if (key == "delta-x") {
            config.delta_x = parse_real(value);
        } else if (key == "hbar") {
            config.hbar = parse_real(value);
        } else if (key == "source") {
            if (value != "pure" && value != "cross") throw InvalidArgument("source must be pure or cross");
            config.source = value == "pure" ? SourceKind::pure : SourceKind::cross;
        } else if (key == "window") {
            if (value != "central" && value != "full") throw InvalidArgument("window must be central or full");
            config.window = value == "central" ? WindowKind::central : WindowKind::full;
        } else if (key == "grid") {
            config.grid = parse_grid(value);
        } else if (key == "cut") {
            if (value == "none") {
                config.cut.reset();
            } else if (value == "p" || value == "x") {
                config.cut = value == "p" ? CutAxis::p_cut_at_x0 : CutAxis::x_cut_at_p0;
            } else {
                throw InvalidArgument("cut must be x, p or none");
            }
        } else if (key == "cut-samples") {
            const int s = parse_int(value, "cut-samples");
            if (s < 2) throw InvalidArgument("cut-samples must be >= 2");
            config.cut_samples = static_cast<std::size_t>(s);
        } else if (key == "format") {
            auto formats = split_list(value);
            for (const auto &f : formats) {
                if (f != "csv" && f != "pgm") throw InvalidArgument("format must be csv or pgm");
            }
            if (formats.empty()) throw InvalidArgument("format list is empty");
            config.formats = formats;
        } else if (key == "map") {
            config.map = parse_value_map(value);
        } else if (key == "pgm-bits") {
            config.pgm_bits = parse_int(value, "pgm-bits");
            if (config.pgm_bits != 8 && config.pgm_bits != 16) throw InvalidArgument("pgm-bits must be 8 or 16");
        } else if (key == "out") {
            config.out = value;
        } else if (key == "allow-undersampled") {
            config.allow_undersampled = parse_bool(value);
        } else {
            throw InvalidArgument("unknown configuration key '" + key + "'");
        }
    }
}

KvDocument to_kv(const ScenarioConfig &config) {
    KvDocument doc;
    doc.set("preset", preset_name(config.preset));
    doc.set("n", std::to_string(config.n));
    doc.set_real("alpha", config.alpha);
    doc.set_real("xi", config.xi);
    doc.set_real("delta-x", config.delta_x);
    doc.set_real("hbar", config.hbar);
    doc.set("source", config.source == SourceKind::pure ? "pure" : "cross");
    doc.set("window", config.window == WindowKind::central ? "central" : "full");
    doc.set("grid", config.grid ? format_grid(*config.grid) : "auto");
    doc.set("cut", !config.cut ? "none" : (*config.cut == CutAxis::p_cut_at_x0 ? "p" : "x"));
    doc.set("cut-samples", std::to_string(config.cut_samples));
    std::string formats;
    for (const auto &f : config.formats) formats += (formats.empty() ? "" : ",") + f;
    doc.set("format", formats);
    doc.set("map", value_map_name(config.map));
    doc.set("pgm-bits", std::to_string(config.pgm_bits));
    doc.set("out", config.out);
    doc.set("allow-undersampled", config.allow_undersampled ? "true" : "false");
    return doc;
}

GridSpec parse_grid(std::string_view text) {
    auto axis = [](std::string_view part, double &lo, double &hi, std::size_t &n) {
        const auto a = part.find(':');
        const auto b = a == std::string_view::npos ? a : part.find(':', a + 1);
        if (b == std::string_view::npos) throw InvalidArgument("grid axis must be lo:hi:n");
        lo = parse_real(part.substr(0, a));
        hi = parse_real(part.substr(a + 1, b - a - 1));
        const int count = parse_int(part.substr(b + 1), "grid sample count");
        if (count < 2) throw InvalidArgument("grid sample count must be >= 2");
        n = static_cast<std::size_t>(count);
    };
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) throw InvalidArgument("grid must be x0:x1:nx,p0:p1:np");
    GridSpec g;
    axis(text.substr(0, comma), g.x_min, g.x_max, g.nx);
    axis(text.substr(comma + 1), g.p_min, g.p_max, g.np);
    validate(g);
    return g;
}

std::string format_grid(const GridSpec &g) {
    return format_real(g.x_min) + ':' + format_real(g.x_max) + ':' + std::to_string(g.nx) + ',' + format_real(g.p_min) +
           ':' + format_real(g.p_max) + ':' + std::to_string(g.np);
}

StateSpec build_state(const ScenarioConfig &config) {
    if (config.is_cat()) return build_cat(config.delta_x, config.xi, config.constants());
    return build_psi(SuperoscParams{config.n, config.alpha}, config.delta_x, config.xi, config.constants());
}

MixtureSpec build_source(const ScenarioConfig &config) {
    const StateSpec state = build_state(config);
    return config.source == SourceKind::cross ? cross_state(state) : as_mixture(state);
}

double structure_length(const ScenarioConfig &config) {
    const double L = config.is_cat() ? 2.0 * config.delta_x : config.n * config.delta_x;
    if (!(L > 0.0)) throw InvalidArgument("structure length must be positive");
    return L;
}

double effective_alpha(const ScenarioConfig &config) { return config.is_cat() ? 1.0 : config.alpha; }

double expected_fringe(const ScenarioConfig &config, const GridSpec &grid) {
    const double h = config.constants().h();
    const double L = structure_length(config);
    const double reach = std::max({std::abs(grid.x_min), std::abs(grid.x_max), std::abs(grid.p_min), std::abs(grid.p_max)});
    const bool central = reach <= (h / L) * (1.0 + 1e-9);
    return central ? h / (2.0 * L * effective_alpha(config)) : h / (2.0 * L);
}

namespace {

std::size_t samples_for(double extent, double step) {
    return std::max<std::size_t>(64, static_cast<std::size_t>(std::ceil(extent / step * (1.0 - 1e-12))) + 1);
}

}  // namespace

GridSpec default_grid(const ScenarioConfig &config) {
    const double h = config.constants().h();
    const double L = structure_length(config);
    GridSpec g;
    if (config.window == WindowKind::central) {
        const double half = h / L;
        g = {-half, half, -half, half, 2, 2};
        const double step = expected_fringe(config, g) / 8.0;
        g.nx = g.np = samples_for(2.0 * half, step);
        return g;
    }
    g = integration_grid(build_source(config));
    const double step = h / (2.0 * L) / 8.0;
    g.np = std::max(g.np, samples_for(g.p_max - g.p_min, step));
    if (config.source == SourceKind::cross) g.nx = std::max(g.nx, samples_for(g.x_max - g.x_min, step));
    return g;
}

void check_resolution(const ScenarioConfig &config, const GridSpec &grid) {
    validate(grid);
    const double fringe = expected_fringe(config, grid);
    const double limit = fringe / 8.0 * (1.0 + 1e-9);
    auto fail = [&](const char *axis, double step) {
        std::ostringstream os;
        os << "grid step along " << axis << " is " << step << ", above 1/8 of the expected fringe " << fringe
           << "; refine the grid or pass --allow-undersampled";
        throw UndersampledError(os.str());
    };
    if (grid.dp() > limit) fail("p", grid.dp());
    if (config.source == SourceKind::cross && grid.dx() > limit) fail("x", grid.dx());
}

CutSpec default_cut(const ScenarioConfig &config) {
    const double h = config.constants().h();
    const double L = structure_length(config);
    const double alpha = effective_alpha(config);
    CutSpec cut;
    cut.axis = config.cut.value_or(CutAxis::p_cut_at_x0);
    cut.window = alpha > 1.0 ? h / L : 2.0 * h / L;
    const double fringe = h / (2.0 * L * alpha);
    cut.samples = std::max(config.cut_samples, samples_for(cut.window, fringe / 8.0));
    return cut;
}

AnalysisResult analyze_scenario(const ScenarioConfig &config) {
    const StateSpec state = build_state(config);
    const double h = config.constants().h();
    const double L = structure_length(config);
    const double alpha = effective_alpha(config);
    CutSpec cut;
    cut.axis = CutAxis::p_cut_at_x0;
    cut.window = h / L;
    cut.expected_fringe = h / (2.0 * L * alpha);
    cut.samples = std::max<std::size_t>(1024, samples_for(cut.window, cut.expected_fringe / 64.0));

    AnalysisResult result;
    const auto crossings = central_cut_crossings(state, cut);
    result.report = superosc_scale(crossings, L, L, config.constants());
    if (config.is_cat()) {
        result.notes.push_back("overspill check skipped: the cat state has no central component");
    } else {
        const OverspillResult o = overspill_check(state);
        result.report.overspill_lhs = o.lhs;
        result.report.overspill_rhs = o.rhs;
        result.overspill = o;
        if (o.indeterminate) {
            result.notes.push_back("overspill check indeterminate: |W(0,0)| below 1e-280");
        } else if (!o.satisfied) {
            result.notes.push_back("overspill condition violated");
        }
    }
    return result;
}

bool ValidationReport::all_passed() const {
    return std::all_of(gates.begin(), gates.end(), [](const GateResult &g) { return g.passed; });
}

ValidationReport validate_scenario(const ScenarioConfig &config, std::size_t points, unsigned long long seed) {
    const StateSpec state = build_state(config);
    const double xi = state.common_xi();
    const double hbar = state.constants.hbar;
    double c_lo = INFINITY, c_hi = -INFINITY;
    for (const auto &c : state.components) {
        c_lo = std::min(c_lo, c.center);
        c_hi = std::max(c_hi, c.center);
    }

    ValidationReport report;
    auto gate = [&](std::string name, double residual, double tolerance) {
        report.gates.push_back({std::move(name), residual, tolerance, residual <= tolerance});
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(c_lo - 3.0 * xi, c_hi + 3.0 * xi);
    std::uniform_real_distribution<double> up(-4.0 * hbar / xi, 4.0 * hbar / xi);
    double worst = 0.0;
    for (std::size_t k = 0; k < points; ++k) {
        const double x = ux(rng);
        const double p = up(rng);
        const double closed = eval_wigner(state, x, p);
        const double brute = wigner_quadrature(state, x, p, default_wigner_quadrature(state, p)).value;
        worst = std::max(worst, std::abs(closed - brute));
    }
    gate("oracle", worst, 1e-8);

    const PhaseSpaceGrid grid = eval_grid(state, integration_grid(as_mixture(state)));
    const auto marginal = marginal_x(grid);
    double marginal_dev = 0.0;
    for (std::size_t i = 0; i < grid.spec.nx; ++i) {
        marginal_dev = std::max(marginal_dev, std::abs(marginal[i] - std::norm(eval_psi(state, grid.spec.x_at(i)))));
    }
    gate("marginal", marginal_dev, 1e-6);

    const double closed_norm = norm_squared(state);
    const double brute_norm = norm_quadrature(state, default_norm_quadrature(state));
    gate("norm", std::abs(closed_norm - brute_norm) / closed_norm, 1e-8);
    gate("total_integral", std::abs(total_integral(grid) - closed_norm), 1e-6);
    return report;
}

SensitivityComparison compare_with_compass(const ScenarioConfig &config, double dir_x, double dir_p) {
    const double hbar = config.hbar;
    const double h = config.constants().h();
    const double L = structure_length(config);
    const double max_shift = 4.0 * std::max(config.xi, hbar / config.xi) + h / L;
    const double step = h / (2.0 * L) / 8.0;

    auto half_for = [&](const MixtureSpec &source) {
        const DisplacementProbe probe(source, integration_grid(source, max_shift));
        return half_overlap_displacement(probe, dir_x, dir_p, step, max_shift);
    };
    SensitivityComparison out;
    out.source_half = half_for(build_source(config));
    out.compass_half = half_for(as_mixture(build_compass(L, L, config.xi, config.constants())));
    out.ratio = out.source_half / out.compass_half;
    return out;
}

}  // namespace sowig
