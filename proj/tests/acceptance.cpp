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

// Acceptance checks 1-9. Prints one PASS/FAIL line per check; exits nonzero if any fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sowig/analysis.hpp"
#include "sowig/diag.hpp"
#include "sowig/oracle.hpp"
#include "sowig/scenario.hpp"
#include "sowig/states.hpp"
#include "sowig/superosc.hpp"
#include "sowig/wigner.hpp"

#ifndef SOWIG_CLI_PATH
#error "SOWIG_CLI_PATH must name the sowig executable"
#endif

using namespace sowig;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Outcome oracle_equivalence() {
    Outcome o;
    double worst = 0.0;
    for (Preset preset : {Preset::fig1, Preset::fig2a, Preset::fig2b, Preset::cat}) {
        const StateSpec s = build_state(preset_config(preset));
        const double xi = s.common_xi(), hbar = s.constants.hbar;
        double lo = INFINITY, hi = -INFINITY;
        for (const auto &c : s.components) {
            lo = std::min(lo, c.center);
            hi = std::max(hi, c.center);
        }
        std::mt19937_64 rng(20260101);
        std::uniform_real_distribution<double> ux(lo - 3.0 * xi, hi + 3.0 * xi), up(-4.0 * hbar / xi, 4.0 * hbar / xi);
        double dev = 0.0;
        for (int k = 0; k < 50; ++k) {
            const double x = ux(rng), p = up(rng);
            const double brute = wigner_quadrature(s, x, p, default_wigner_quadrature(s, p)).value;
            dev = std::max(dev, std::abs(eval_wigner(s, x, p) - brute));
        }
        o.pass = o.pass && dev <= 1e-8;
        o.detail += preset_name(preset) + fmt("=%.2e ", dev);
        worst = std::max(worst, dev);
    }
    o.detail += fmt("(max %.2e, tol 1e-8)", worst);
    return o;
}

Outcome cat_formula() {
    const double dx = 3.0, xi = 1.0, hbar = 1.0;
    const StateSpec cat = build_cat(dx, xi, {hbar}, Normalization::raw);
    auto G = [&](double x, double p) { return std::exp(-x * x / (xi * xi) - p * p * xi * xi / (hbar * hbar)) / (kPi * hbar); };
    double dev = 0.0;
    int count = 0;
    for (int i = 0; i < 40; ++i) {
        for (int j = 0; j < 25; ++j) {
            const double x = -6.0 + 12.0 * i / 39.0, p = -3.0 + 6.0 * j / 24.0;
            const double printed = 0.5 * (G(x - dx, p) + G(x + dx, p)) + G(x, p) * std::cos(2.0 * p * dx / hbar);
            dev = std::max(dev, std::abs(eval_wigner(cat, x, p) - printed));
            ++count;
        }
    }
    return {dev <= 1e-12, fmt("%.2e", dev) + " max-abs over " + std::to_string(count) + " points (tol 1e-12)"};
}

Outcome coefficient_identities() {
    double sum_dev = 0.0, f_dev = 0.0;
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ux(-kPi, kPi);
    for (int n = 2; n <= 32; n += 2) {
        for (double alpha : {1.0, 2.0, 6.0, 10.0, 16.0}) {
            const SuperoscParams params{n, alpha};
            const CoeffTable t = fourier_coeffs(params);
            sum_dev = std::max({sum_dev, std::abs(t.sum_c - 1.0), std::abs(t.sum_d - 1.0)});
            for (int k = 0; k < 100; ++k) {
                const double x = ux(rng);
                const Complex a = eval_f_direct(params, x);
                f_dev = std::max(f_dev, std::abs(a - eval_f_fourier(t, params, x)) / std::abs(a));
            }
        }
    }
    return {sum_dev <= 1e-12 && f_dev <= 1e-9,
            fmt("sum deviation %.2e (tol 1e-12), ", sum_dev) + fmt("direct/fourier rel %.2e (tol 1e-9)", f_dev)};
}

Outcome superosc_recovery() {
    const ScenarioConfig cfg = preset_config(Preset::fig1);
    const AnalysisResult r = analyze_scenario(cfg);
    const double width = cfg.constants().h() / structure_length(cfg);
    const double a = r.report.alpha_est;
    return {std::abs(a - 10.0) <= 1.5, fmt("alpha_est = %.4f", a) + fmt(" in window h/L = %.4f (target 10 +-15%%)", width)};
}

Outcome sub_zurek_scaling() {
    const AnalysisResult b = analyze_scenario(preset_config(Preset::fig2b));
    const AnalysisResult c = analyze_scenario(preset_config(Preset::fig2c));
    const double ratio = c.report.a_SO_est / b.report.a_SO_est;
    const double target = (10.0 / 16.0) * (10.0 / 16.0);
    return {std::abs(ratio / target - 1.0) <= 0.2,
            fmt("a_SO(c)/a_SO(b) = %.4f", ratio) + fmt(" vs %.4f +-20%%", target) +
                fmt(" (alpha_est b = %.3f", b.report.alpha_est) + fmt(", c = %.3f)", c.report.alpha_est)};
}

Outcome overspill() {
    ScenarioConfig cfg = preset_config(Preset::fig1);
    OverspillResult tight, wide;
    std::size_t tight_warnings = 0, wide_warnings = 0;
    {
        WarningCapture cap;
        tight = overspill_check(build_state(cfg));
        tight_warnings = cap.messages().size();
    }
    cfg.xi = 3.0;
    {
        WarningCapture cap;
        wide = overspill_check(build_state(cfg));
        wide_warnings = cap.messages().size();
    }
    const bool pass = tight.satisfied && tight.ratio < 1e-3 && tight_warnings == 0 && !wide.satisfied &&
                      wide.ratio > 0.1 && wide_warnings == 1;
    return {pass, fmt("fig1 ratio %.2e (< 1e-3), ", tight.ratio) + fmt("xi=3 ratio %.3g (> 0.1), ", wide.ratio) +
                      "warnings " + std::to_string(tight_warnings) + "/" + std::to_string(wide_warnings)};
}

Outcome wigner_axioms() {
    Outcome o;
    double worst_total = 0.0, worst_marginal = 0.0, worst_bound = -INFINITY, worst_purity = 0.0;
    std::string cross_detail;
    for (Preset preset : {Preset::fig1, Preset::fig2a, Preset::fig2b, Preset::fig2c, Preset::cat}) {
        const ScenarioConfig cfg = preset_config(preset);
        const StateSpec s = build_state(cfg);
        const double hbar = s.constants.hbar;
        const MixtureSpec pure = as_mixture(s);
        const MixtureSpec cross = cross_state(s);
        // One lattice large enough for both, so purities are comparable.
        const GridSpec spec = integration_grid(cross);
        const PhaseSpaceGrid w = eval_grid(pure, spec);

        worst_total = std::max(worst_total, std::abs(total_integral(w) - 1.0));
        const auto m = marginal_x(w);
        for (std::size_t i = 0; i < spec.nx; ++i) {
            worst_marginal = std::max(worst_marginal, std::abs(m[i] - std::norm(eval_psi(s, spec.x_at(i)))));
        }
        for (double v : w.values) worst_bound = std::max(worst_bound, std::abs(v) - 1.0 / (kPi * hbar));
        const double pure_purity = overlap(w, w, s.constants);
        worst_purity = std::max(worst_purity, std::abs(pure_purity - 1.0));
        if (cfg.source == SourceKind::cross) {
            const PhaseSpaceGrid wc = eval_grid(cross, spec);
            const double cross_purity = overlap(wc, wc, s.constants);
            o.pass = o.pass && cross_purity < pure_purity;
            cross_detail += " " + preset_name(preset) + fmt(" %.4f", cross_purity);
        }
    }
    o.pass = o.pass && worst_total <= 1e-6 && worst_marginal <= 1e-6 && worst_bound <= 1e-9 && worst_purity <= 1e-4;
    o.detail = fmt("total %.1e, ", worst_total) + fmt("marginal %.1e, ", worst_marginal) +
               fmt("max |W| - 1/(pi hbar) %.2e, ", worst_bound) + fmt("purity %.1e; cross purity", worst_purity) +
               cross_detail;
    return o;
}

Outcome no_sensitivity_gain() {
    const SensitivityComparison c = compare_with_compass(preset_config(Preset::fig2a));
    return {std::abs(c.ratio - 1.0) <= 0.25, fmt("half-overlap shift: cross %.4f", c.source_half) +
                                                 fmt(", compass %.4f", c.compass_half) +
                                                 fmt(", ratio %.3f (target 1 +-25%%)", c.ratio)};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    const ScenarioConfig cfg = preset_config(Preset::fig2b);
    const MixtureSpec source = build_source(cfg);
    const double w = cfg.constants().h() / structure_length(cfg);
    const GridSpec spec{-w, w, -w, w, 257, 257};
    const PhaseSpaceGrid fast = eval_grid(source, spec);
    const PhaseSpaceGrid slow = eval_grid(source, spec, {GridMethod::pointwise, 1});
    double dev = 0.0;
    for (std::size_t k = 0; k < fast.values.size(); ++k) dev = std::max(dev, std::abs(fast.values[k] - slow.values[k]));

    const fs::path dir = fs::temp_directory_path() / "sowig_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    bool identical = true;
    std::string files;
    for (const char *name : {"a", "b"}) {
        const std::string prefix = (dir / name).string();
        const std::string cmd = std::string("\"") + SOWIG_CLI_PATH + "\" wigner --preset fig2b --format csv --format pgm --out \"" +
                                prefix + "\" > /dev/null && \"" + SOWIG_CLI_PATH + "\" coeffs --n 12 --alpha 16 --out \"" +
                                prefix + "\" > /dev/null";
        if (std::system(cmd.c_str()) != 0) identical = false;
    }
    for (const char *ext : {".csv", ".pgm", ".coeffs.csv"}) {
        const std::string a = slurp(dir / (std::string("a") + ext)), b = slurp(dir / (std::string("b") + ext));
        // Headers echo the output prefix, which differs between the two runs.
        const auto strip = [](const std::string &t) {
            std::string out;
            std::istringstream in(t);
            for (std::string line; std::getline(in, line);) {
                if (line.rfind("# out = ", 0) != 0) out += line + '\n';
            }
            return out;
        };
        if (a.empty() || strip(a) != strip(b)) identical = false;
        files += std::string(" ") + ext;
    }
    fs::remove_all(dir);
    return {dev <= 1e-12 && identical,
            fmt("fast vs pointwise %.2e on 257x257 (tol 1e-12); repeated CLI outputs", dev) +
                (identical ? " identical" : " DIFFER") + " (" + files.substr(1) + ")"};
}

}  // namespace

int main() {
    WarningCapture quiet;  // expected warnings are checked explicitly where they matter
    const std::vector<std::pair<const char *, std::function<Outcome()>>> checks{
        {"oracle equivalence", oracle_equivalence},
        {"cat-state formula", cat_formula},
        {"coefficient identities", coefficient_identities},
        {"superoscillation factor recovery", superosc_recovery},
        {"sub-Zurek scaling", sub_zurek_scaling},
        {"overspill condition", overspill},
        {"Wigner axioms", wigner_axioms},
        {"no sensitivity gain", no_sensitivity_gain},
        {"determinism and fast path", determinism},
    };
    int failures = 0;
    for (std::size_t k = 0; k < checks.size(); ++k) {
        Outcome o;
        try {
            o = checks[k].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%zu] %-34s %s  %s\n", k + 1, checks[k].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu checks passed\n", static_cast<int>(checks.size()) - failures, checks.size());
    return failures == 0 ? 0 : 1;
}
