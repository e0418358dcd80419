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

#include "sowig/export.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "sowig/error.hpp"
#include "sowig/kvtext.hpp"

namespace sowig {

ValueMap parse_value_map(std::string_view name) {
    if (name == "linear") return ValueMap::linear;
    if (name == "signed") return ValueMap::signed_symmetric;
    if (name == "logabs") return ValueMap::log_magnitude;
    throw InvalidArgument("unknown value map '" + std::string(name) + "' (linear|signed|logabs)");
}

std::string value_map_name(ValueMap map) {
    switch (map) {
        case ValueMap::linear: return "linear";
        case ValueMap::signed_symmetric: return "signed";
        case ValueMap::log_magnitude: return "logabs";
    }
    return "linear";
}

namespace {

void append_comments(std::string &out, const std::vector<std::string> &comments) {
    for (const auto &c : comments) out.append("# ").append(c).push_back('\n');
}

double log_abs(double v) { return std::log(std::max(std::abs(v), kLogFloor)); }

// Maps values to [0, 1]; returns the range that was mapped.
struct MappedRange {
    double lo = 0.0;
    double hi = 0.0;
};

MappedRange map_range(const std::vector<double> &values, ValueMap map) {
    MappedRange r{INFINITY, -INFINITY};
    for (double v : values) {
        const double m = map == ValueMap::log_magnitude ? log_abs(v) : v;
        r.lo = std::min(r.lo, m);
        r.hi = std::max(r.hi, m);
    }
    if (map == ValueMap::signed_symmetric) {
        const double s = std::max(std::abs(r.lo), std::abs(r.hi));
        r = {-s, s};
    }
    return r;
}

double unit_value(double v, ValueMap map, const MappedRange &r) {
    const double m = map == ValueMap::log_magnitude ? log_abs(v) : v;
    if (!(r.hi > r.lo)) return 0.5;
    return std::clamp((m - r.lo) / (r.hi - r.lo), 0.0, 1.0);
}

}  // namespace

std::string grid_to_csv(const PhaseSpaceGrid &grid, const std::vector<std::string> &comments) {
    const auto &s = grid.spec;
    std::string out;
    append_comments(out, comments);
    out += "x_min,x_max,p_min,p_max,nx,np\n";
    out += format_real(s.x_min) + ',' + format_real(s.x_max) + ',' + format_real(s.p_min) + ',' + format_real(s.p_max) +
           ',' + std::to_string(s.nx) + ',' + std::to_string(s.np) + '\n';
    for (std::size_t i = 0; i < s.nx; ++i) {
        for (std::size_t j = 0; j < s.np; ++j) {
            if (j) out.push_back(',');
            out += format_real(grid.at(i, j));
        }
        out.push_back('\n');
    }
    return out;
}

PhaseSpaceGrid grid_from_csv(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        lines.push_back(line);
    }
    auto split = [](std::string_view line) {
        std::vector<std::string_view> cells;
        while (true) {
            const auto comma = line.find(',');
            cells.push_back(line.substr(0, comma));
            if (comma == std::string_view::npos) break;
            line.remove_prefix(comma + 1);
        }
        return cells;
    };
    if (lines.size() < 2 || lines[0] != "x_min,x_max,p_min,p_max,nx,np") throw InvalidArgument("grid CSV: bad header");
    const auto head = split(lines[1]);
    if (head.size() != 6) throw InvalidArgument("grid CSV: header needs 6 fields");
    PhaseSpaceGrid grid;
    grid.spec = {parse_real(head[0]), parse_real(head[1]), parse_real(head[2]), parse_real(head[3]),
                 static_cast<std::size_t>(parse_real(head[4])), static_cast<std::size_t>(parse_real(head[5]))};
    validate(grid.spec);
    if (lines.size() != 2 + grid.spec.nx) throw InvalidArgument("grid CSV: expected nx value rows");
    grid.values.reserve(grid.spec.nx * grid.spec.np);
    for (std::size_t i = 0; i < grid.spec.nx; ++i) {
        const auto cells = split(lines[2 + i]);
        if (cells.size() != grid.spec.np) throw InvalidArgument("grid CSV: row " + std::to_string(i) + " needs np values");
        for (auto c : cells) grid.values.push_back(parse_real(c));
    }
    return grid;
}

std::string grid_to_pgm(const PhaseSpaceGrid &grid, ValueMap map, int bits, const std::vector<std::string> &comments) {
    if (bits != 8 && bits != 16) throw InvalidArgument("PGM depth must be 8 or 16 bits");
    const auto &s = grid.spec;
    const MappedRange r = map_range(grid.values, map);
    const unsigned maxval = bits == 8 ? 255u : 65535u;

    std::string out = "P5\n";
    append_comments(out, comments);
    std::ostringstream info;
    info << "map=" << value_map_name(map) << " min=" << format_real(r.lo) << " max=" << format_real(r.hi);
    if (map == ValueMap::log_magnitude) info << " floor=" << format_real(kLogFloor);
    info << " columns=x rows=p(top=p_max)";
    append_comments(out, {info.str()});
    out += std::to_string(s.nx) + ' ' + std::to_string(s.np) + '\n' + std::to_string(maxval) + '\n';

    for (std::size_t row = 0; row < s.np; ++row) {
        const std::size_t j = s.np - 1 - row;
        for (std::size_t i = 0; i < s.nx; ++i) {
            const auto level = static_cast<unsigned>(std::lround(unit_value(grid.at(i, j), map, r) * maxval));
            if (bits == 16) out.push_back(static_cast<char>((level >> 8) & 0xff));
            out.push_back(static_cast<char>(level & 0xff));
        }
    }
    return out;
}

std::string cut_to_csv(const CutProfile &profile, CutAxis axis, ValueMap map, const std::vector<std::string> &comments) {
    std::string out;
    append_comments(out, comments);
    double scale = 0.0;
    for (double v : profile.values) scale = std::max(scale, std::abs(v));
    out += std::string(axis == CutAxis::p_cut_at_x0 ? "p" : "x") + ",W," + value_map_name(map) + '\n';
    for (std::size_t k = 0; k < profile.coords.size(); ++k) {
        const double v = profile.values[k];
        double mapped = v;
        if (map == ValueMap::log_magnitude) mapped = log_abs(v);
        if (map == ValueMap::signed_symmetric) mapped = scale > 0.0 ? v / scale : 0.0;
        out += format_real(profile.coords[k]) + ',' + format_real(v) + ',' + format_real(mapped) + '\n';
    }
    return out;
}

void write_file_atomic(const std::filesystem::path &path, std::string_view content) {
    namespace fs = std::filesystem;
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

}  // namespace sowig
