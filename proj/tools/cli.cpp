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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "sowig/diag.hpp"
#include "sowig/error.hpp"
#include "sowig/export.hpp"
#include "sowig/kvtext.hpp"
#include "sowig/scenario.hpp"
#include "sowig/serialize.hpp"
#include "sowig/superosc.hpp"

namespace sowig::cli {

unsigned long long fnv1a64(std::string_view text) {
    unsigned long long hash = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        hash ^= ch;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

namespace {

// Flag values as given on the command line, keyed like the config file.
struct FlagValues {
    std::map<std::string, std::string> values;
    std::vector<std::string> formats;
    std::string config_path;
    bool allow_undersampled = false;
};

void add_scenario_flags(CLI::App &cmd, FlagValues &flags) {
    auto text = [&](const char *name, const char *key, const char *help) {
        cmd.add_option_function<std::string>(
            name, [&flags, key](const std::string &v) { flags.values[key] = v; }, help);
    };
    text("--preset", "preset", "fig1 | fig2a | fig2b | fig2c | cat | custom");
    text("--n", "n", "even exponent N");
    text("--alpha", "alpha", "superoscillation strength alpha >= 1");
    text("--xi", "xi", "Gaussian width");
    text("--delta-x", "delta-x", "component spacing");
    text("--hbar", "hbar", "reduced Planck constant");
    text("--source", "source", "pure | cross");
    text("--window", "window", "central | full (default grid window)");
    text("--grid", "grid", "x0:x1:nx,p0:p1:np");
    text("--cut", "cut", "x | p: write a 1-D cut through the origin instead of a grid");
    text("--cut-samples", "cut-samples", "minimum number of cut samples");
    text("--map", "map", "linear | signed | logabs");
    text("--pgm-bits", "pgm-bits", "8 | 16");
    text("--out", "out", "output path prefix");
    cmd.add_option("--format", flags.formats, "csv | pgm (repeatable)");
    cmd.add_option("--config", flags.config_path, "flat key = value file");
    cmd.add_flag("--allow-undersampled", flags.allow_undersampled, "accept grids coarser than the resolution rule");
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// flags > config file > preset defaults
ScenarioConfig resolve(const FlagValues &flags) {
    KvDocument file;
    if (!flags.config_path.empty()) file = parse_kv(read_text_file(flags.config_path));

    ScenarioConfig config;
    KvDocument file_rest;
    if (auto it = flags.values.find("preset"); it != flags.values.end()) {
        config = preset_config(parse_preset(it->second));
        for (const auto &[k, v] : file.entries()) {
            if (k != "preset") file_rest.set(k, v);
        }
    } else {
        file_rest = file;
    }
    apply_kv(config, file_rest);

    KvDocument given;
    for (const auto &[k, v] : flags.values) {
        if (k != "preset") given.set(k, v);
    }
    if (!flags.formats.empty()) {
        std::string joined;
        for (const auto &f : flags.formats) joined += (joined.empty() ? "" : ",") + f;
        given.set("format", joined);
    }
    if (flags.allow_undersampled) given.set("allow-undersampled", "true");
    apply_kv(config, given);
    if (config.out.empty()) config.out = preset_name(config.preset);
    return config;
}

std::vector<std::string> header_lines(std::string_view command, const ScenarioConfig &config) {
    std::vector<std::string> lines{"sowig " + std::string(command)};
    std::istringstream body(to_kv(config).to_text());
    for (std::string line; std::getline(body, line);) lines.push_back(line);
    return lines;
}

std::string comment_block(const std::vector<std::string> &lines) {
    std::string out;
    for (const auto &l : lines) out += "# " + l + "\n";
    return out;
}

int cmd_coeffs(const ScenarioConfig &config, std::ostream &out) {
    const SuperoscParams params{config.n, config.alpha};
    const CoeffTable table = fourier_coeffs(params);
    const std::string inputs = "n=" + std::to_string(params.n) + ";alpha=" + format_real(params.alpha);
    char checksum[32];
    std::snprintf(checksum, sizeof checksum, "%016llx", fnv1a64(inputs));

    std::string text = comment_block({"sowig coeffs", "n = " + std::to_string(params.n),
                                      "alpha = " + format_real(params.alpha),
                                      "input_checksum = fnv1a64:" + std::string(checksum),
                                      "precision_bits = " + std::to_string(table.precision_bits)});
    text += "j,C,D,K\n";
    for (std::size_t j = 0; j < table.c.size(); ++j) {
        text += std::to_string(j) + ',' + format_real(table.c[j] + 0.0);
        if (j < table.d.size()) {
            text += ',' + format_real(table.d[j] + 0.0) + ',' + format_real(table.k[j]);
        } else {
            text += ",,";
        }
        text += '\n';
    }
    text += "# sum_C = " + format_real(table.sum_c) + "\n";
    text += "# sum_D = " + format_real(table.sum_d) + "\n";

    const std::string path = config.out + ".coeffs.csv";
    write_file_atomic(path, text);
    out << "wrote " << path << " (" << table.c.size() << " rows, sum_C = " << format_real(table.sum_c)
        << ", sum_D = " << format_real(table.sum_d) << ")\n";
    return kOk;
}

int cmd_wigner(const ScenarioConfig &config, const std::optional<std::string> &at, std::ostream &out) {
    const MixtureSpec source = build_source(config);
    const auto header = header_lines("wigner", config);

    if (at) {
        const auto comma = at->find(',');
        if (comma == std::string::npos) throw InvalidArgument("--at expects x,p");
        const double x = parse_real(std::string_view(*at).substr(0, comma));
        const double p = parse_real(std::string_view(*at).substr(comma + 1));
        out << "W(" << format_real(x) << ", " << format_real(p) << ") = " << format_real(eval_mixture(source, x, p))
            << "\n";
        return kOk;
    }

    if (config.cut) {
        CutSpec cut = default_cut(config);
        const CutProfile profile = sample_cut(source, cut);
        const std::string path = config.out + ".cut.csv";
        auto lines = header;
        lines.push_back("cut_window = " + format_real(cut.window));
        lines.push_back("cut_samples = " + std::to_string(cut.samples));
        write_file_atomic(path, cut_to_csv(profile, cut.axis, config.map, lines));
        out << "wrote " << path << " (" << cut.samples << " samples over width " << format_real(cut.window) << ")\n";
        return kOk;
    }

    const GridSpec grid = config.grid ? *config.grid : default_grid(config);
    if (config.allow_undersampled) {
        try {
            check_resolution(config, grid);
        } catch (const UndersampledError &e) {
            warn(std::string("allowed undersampled grid: ") + e.what());
        }
    } else {
        check_resolution(config, grid);
    }
    const PhaseSpaceGrid values = eval_grid(source, grid);
    auto lines = header;
    lines.push_back("resolved_grid = " + format_grid(grid));
    for (const auto &format : config.formats) {
        const std::string path = config.out + "." + format;
        if (format == "csv") {
            write_file_atomic(path, grid_to_csv(values, lines));
        } else {
            write_file_atomic(path, grid_to_pgm(values, config.map, config.pgm_bits, lines));
        }
        out << "wrote " << path << " (" << grid.nx << " x " << grid.np << ")\n";
    }
    if (config.source == SourceKind::pure) {
        const std::string path = config.out + ".state";
        write_file_atomic(path, state_to_text(build_state(config)));
        out << "wrote " << path << "\n";
    }
    return kOk;
}

int cmd_analyze(const ScenarioConfig &config, std::ostream &out) {
    const AnalysisResult result = analyze_scenario(config);
    const ScaleReport &r = result.report;
    const std::string path = config.out + ".report";
    write_file_atomic(path, comment_block(header_lines("analyze", config)) + report_to_text(r));

    auto row = [&](const char *name, double v) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "  %-16s %.10g\n", name, v);
        out << buf;
    };
    out << "scale report (" << preset_name(config.preset) << ")\n";
    row("L", r.L);
    row("P", r.P);
    row("a_Z", r.a_Z);
    row("alpha_est", r.alpha_est);
    row("a_SO_est", r.a_SO_est);
    row("a_Z/a_SO_est", r.a_Z / r.a_SO_est);
    row("crossings", static_cast<double>(r.crossing_spacings.size() + 1));
    if (result.overspill) {
        row("overspill_lhs", result.overspill->lhs);
        row("overspill_rhs", result.overspill->rhs);
        row("overspill_ratio", result.overspill->ratio);
        out << "  overspill        " << (result.overspill->indeterminate ? "indeterminate"
                                         : result.overspill->satisfied  ? "satisfied"
                                                                        : "VIOLATED")
            << "\n";
    }
    for (const auto &note : result.notes) out << "note: " << note << "\n";
    out << "wrote " << path << "\n";
    return kOk;
}

int cmd_validate(const ScenarioConfig &config, std::size_t points, std::ostream &out, std::ostream &err) {
    const ValidationReport report = validate_scenario(config, points);
    std::string failed;
    for (const auto &g : report.gates) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-16s residual %.3e  tolerance %.1e  %s\n", g.name.c_str(), g.residual,
                      g.tolerance, g.passed ? "PASS" : "FAIL");
        out << buf;
        if (!g.passed) failed += (failed.empty() ? "" : ", ") + g.name;
    }
    if (!failed.empty()) {
        err << "sowig: validation failed: " << failed << "\n";
        return kValidateFailed;
    }
    return kOk;
}

int cmd_sensitivity(const ScenarioConfig &config, const std::string &direction, std::optional<double> shift_x,
                    std::optional<double> shift_p, std::ostream &out) {
    if (direction != "x" && direction != "p") throw InvalidArgument("--direction must be x or p");
    if (shift_x || shift_p) {
        const MixtureSpec source = build_source(config);
        const double sx = shift_x.value_or(0.0), sp = shift_p.value_or(0.0);
        const double margin = std::max(std::abs(sx), std::abs(sp));
        const double o = displacement_sensitivity(source, sx, sp, integration_grid(source, margin));
        out << "overlap(" << format_real(sx) << ", " << format_real(sp) << ") = " << format_real(o) << "\n";
    }
    const bool along_x = direction == "x";
    const SensitivityComparison c = compare_with_compass(config, along_x ? 1.0 : 0.0, along_x ? 0.0 : 1.0);
    out << "half-overlap displacement along " << direction << "\n";
    out << "  source   " << format_real(c.source_half) << "\n";
    out << "  compass  " << format_real(c.compass_half) << "\n";
    out << "  ratio    " << format_real(c.ratio) << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Wigner functions of superoscillating cat superpositions", "sowig"};
    app.require_subcommand(1);

    FlagValues flags;
    auto *coeffs = app.add_subcommand("coeffs", "write the Fourier coefficient table");
    auto *wigner = app.add_subcommand("wigner", "evaluate the Wigner function on a grid or cut");
    auto *analyze = app.add_subcommand("analyze", "crossing-spacing scale report and overspill check");
    auto *validate = app.add_subcommand("validate", "closed form against the quadrature oracle");
    auto *sensitivity = app.add_subcommand("sensitivity", "displacement sensitivity against a compass state");
    for (auto *cmd : {coeffs, wigner, analyze, validate, sensitivity}) add_scenario_flags(*cmd, flags);

    std::optional<std::string> at;
    wigner->add_option_function<std::string>("--at", [&](const std::string &v) { at = v; }, "print W at x,p");
    std::size_t points = 50;
    validate->add_option("--points", points, "number of random oracle points");
    std::string direction = "p";
    std::optional<double> shift_x, shift_p;
    sensitivity->add_option("--direction", direction, "x | p");
    sensitivity->add_option_function<double>("--shift-x", [&](double v) { shift_x = v; }, "overlap at this x shift");
    sensitivity->add_option_function<double>("--shift-p", [&](double v) { shift_p = v; }, "overlap at this p shift");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "sowig: " << e.what() << "\n";
        return kInvalid;
    }

    WarningHandler previous = set_warning_handler([&err](std::string_view m) { err << "warning: " << m << "\n"; });
    struct Restore {
        WarningHandler &h;
        ~Restore() { set_warning_handler(std::move(h)); }
    } restore{previous};

    try {
        const ScenarioConfig config = resolve(flags);
        if (*coeffs) return cmd_coeffs(config, out);
        if (*wigner) return cmd_wigner(config, at, out);
        if (*analyze) return cmd_analyze(config, out);
        if (*validate) return cmd_validate(config, points, out, err);
        return cmd_sensitivity(config, direction, shift_x, shift_p, out);
    } catch (const InvalidArgument &e) {
        err << "sowig: invalid parameters: " << e.what() << "\n";
        return kInvalid;
    } catch (const UndersampledError &e) {
        err << "sowig: undersampled: " << e.what() << "\n";
        return kUndersampled;
    } catch (const AnalysisError &e) {
        err << "sowig: analysis failed: " << e.what() << "\n";
        return kAnalysis;
    } catch (const std::exception &e) {
        err << "sowig: internal error: " << e.what() << "\n";
        return kInternal;
    }
}

}  // namespace sowig::cli
