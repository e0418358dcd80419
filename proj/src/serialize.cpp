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

#include "sowig/serialize.hpp"

#include "sowig/error.hpp"
#include "sowig/kvtext.hpp"

namespace sowig {

std::string state_to_text(const StateSpec &state) {
    KvDocument doc;
    doc.set_real("hbar", state.constants.hbar);
    doc.set("normalized", state.normalized ? "true" : "false");
    doc.set("components", std::to_string(state.components.size()));
    for (std::size_t i = 0; i < state.components.size(); ++i) {
        const auto &c = state.components[i];
        const std::string base = "component." + std::to_string(i) + ".";
        doc.set_real(base + "center", c.center);
        doc.set_real(base + "xi", c.xi);
        doc.set_real(base + "coeff_re", c.coeff.real());
        doc.set_real(base + "coeff_im", c.coeff.imag());
        doc.set_real(base + "momentum", c.momentum);
    }
    return "# sowig state\n" + doc.to_text();
}

StateSpec state_from_text(std::string_view text) {
    const KvDocument doc = parse_kv(text);
    StateSpec state;
    state.constants.hbar = doc.real("hbar");
    const std::string flag = doc.text("normalized");
    if (flag != "true" && flag != "false") throw InvalidArgument("normalized must be true or false");
    state.normalized = flag == "true";
    const double count = doc.real("components");
    if (!(count >= 1.0) || count != static_cast<double>(static_cast<std::size_t>(count))) {
        throw InvalidArgument("components must be a positive integer");
    }
    for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i) {
        const std::string base = "component." + std::to_string(i) + ".";
        GaussianComponent c;
        c.center = doc.real(base + "center");
        c.xi = doc.real(base + "xi");
        c.coeff = {doc.real(base + "coeff_re"), doc.real(base + "coeff_im")};
        c.momentum = doc.has(base + "momentum") ? doc.real(base + "momentum") : 0.0;
        state.components.push_back(c);
    }
    validate(state);
    return state;
}

std::string report_to_text(const ScaleReport &report) {
    KvDocument doc;
    doc.set_real("L", report.L);
    doc.set_real("P", report.P);
    doc.set_real("a_Z", report.a_Z);
    doc.set_real("alpha_est", report.alpha_est);
    doc.set_real("a_SO_est", report.a_SO_est);
    std::string spacings;
    for (std::size_t k = 0; k < report.crossing_spacings.size(); ++k) {
        if (k) spacings += ", ";
        spacings += format_real(report.crossing_spacings[k]);
    }
    doc.set("crossing_spacings", spacings);
    doc.set_real("overspill_lhs", report.overspill_lhs);
    doc.set_real("overspill_rhs", report.overspill_rhs);
    doc.set_real("overspill_ratio", report.overspill_lhs / report.overspill_rhs);
    return doc.to_text();
}

ScaleReport report_from_text(std::string_view text) {
    const KvDocument doc = parse_kv(text);
    ScaleReport r;
    r.L = doc.real("L");
    r.P = doc.real("P");
    r.a_Z = doc.real("a_Z");
    r.alpha_est = doc.real("alpha_est");
    r.a_SO_est = doc.real("a_SO_est");
    const std::string spacings = doc.text("crossing_spacings");
    std::string_view list = spacings;
    while (!list.empty()) {
        const auto comma = list.find(',');
        std::string_view token = list.substr(0, comma);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (!token.empty()) r.crossing_spacings.push_back(parse_real(token));
        list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    }
    r.overspill_lhs = doc.real("overspill_lhs");
    r.overspill_rhs = doc.real("overspill_rhs");
    return r;
}

}  // namespace sowig
