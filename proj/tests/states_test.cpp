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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sowig/diag.hpp"
#include "sowig/error.hpp"
#include "sowig/oracle.hpp"
#include "sowig/states.hpp"

using namespace sowig;

namespace {
const PhysicalConstants kUnit{1.0};
}

TEST(states, gaussian_is_normalized) {
    const StateSpec g = build_gaussian(1.5, 0.7, kUnit);
    EXPECT_NEAR(norm_squared(g), 1.0, 1e-15);
    EXPECT_NEAR(norm_quadrature(g, default_norm_quadrature(g)), 1.0, 1e-12);
}

TEST(states, cat_raw_and_normalized) {
    const StateSpec raw = build_cat(3.0, 1.0, kUnit, Normalization::raw);
    ASSERT_EQ(raw.components.size(), 2u);
    EXPECT_DOUBLE_EQ(raw.components[0].coeff.real(), 1.0 / std::sqrt(2.0));
    EXPECT_NEAR(norm_squared(raw), 1.0 + std::exp(-9.0), 1e-15);
    const StateSpec cat = build_cat(3.0, 1.0, kUnit);
    EXPECT_TRUE(cat.normalized);
    EXPECT_NEAR(norm_squared(cat), 1.0, 1e-15);
}

TEST(states, psi_has_n_plus_one_spikes) {
    for (int n : {2, 4, 8, 12}) {
        WarningCapture quiet;
        const StateSpec psi = build_psi({n, 10.0}, 3.0, 0.25, kUnit);
        ASSERT_EQ(psi.components.size(), static_cast<std::size_t>(n + 1));
        for (int j = 0; j <= n; ++j) EXPECT_DOUBLE_EQ(psi.components[j].center, (j - n / 2) * 3.0);
    }
}

TEST(states, psi_coefficients_are_conjugate_symmetric) {
    const StateSpec psi = build_psi({12, 16.0}, 3.0, 0.25, kUnit, Normalization::raw);
    const std::size_t m = psi.components.size();
    for (std::size_t j = 0; j < m; ++j) {
        const Complex a = psi.components[j].coeff, b = psi.components[m - 1 - j].coeff;
        EXPECT_EQ(std::abs(a), std::abs(b));
        EXPECT_EQ(a, std::conj(b));
    }
    const CoeffTable t = fourier_coeffs({12, 16.0});
    EXPECT_DOUBLE_EQ(psi.components[6].coeff.real(), t.k[0]);
    EXPECT_DOUBLE_EQ(std::abs(psi.components[7].coeff), t.k[1] / std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(psi.components[7].coeff.imag(), -t.k[1] / std::sqrt(2.0));
}

TEST(states, psi_reflection_is_conjugation) {
    const StateSpec psi = build_psi({8, 10.0}, 3.0, 0.25, kUnit);
    for (double x : {0.1, 1.0, 2.9, 7.3}) {
        const Complex a = eval_psi(psi, -x), b = std::conj(eval_psi(psi, x));
        EXPECT_LE(std::abs(a - b), 1e-15 * (1.0 + std::abs(a)));
    }
}

TEST(states, norm_matches_quadrature) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        StateSpec s;
        s.constants = {0.5 + std::abs(u(rng))};
        const double xi = 0.3 + std::abs(u(rng));
        const int count = 1 + trial % 5;
        for (int k = 0; k < count; ++k) {
            s.components.push_back({3.0 * u(rng), xi, {u(rng), u(rng)}, 2.0 * u(rng)});
        }
        const double closed = norm_squared(s);
        const double brute = norm_quadrature(s, default_norm_quadrature(s));
        EXPECT_NEAR(closed, brute, 1e-10 * closed) << "trial " << trial;
    }
}

TEST(states, presets_normalize_to_unity) {
    WarningCapture quiet;
    for (auto [n, alpha, xi, dx] : std::vector<std::tuple<int, double, double, double>>{
             {8, 10.0, 0.25, 3.0}, {4, 6.0, 1.0, 6.0}, {12, 10.0, 0.25, 3.0}, {12, 16.0, 0.25, 3.0}}) {
        const StateSpec psi = build_psi({n, alpha}, dx, xi, kUnit);
        EXPECT_NEAR(norm_squared(psi), 1.0, 1e-13);
        EXPECT_NEAR(norm_quadrature(psi, default_norm_quadrature(psi)), 1.0, 1e-10);
    }
}

TEST(states, odd_half_exponent_warns) {
    {
        WarningCapture cap;
        build_psi({2, 3.0}, 3.0, 0.25, kUnit);
        EXPECT_EQ(cap.messages().size(), 1u);
    }
    {
        WarningCapture cap;
        build_psi({8, 3.0}, 3.0, 0.25, kUnit);
        EXPECT_TRUE(cap.messages().empty());
    }
}

TEST(states, compass_has_four_arms) {
    const StateSpec c = build_compass(24.0, 24.0, 1.0, kUnit);
    ASSERT_EQ(c.components.size(), 4u);
    EXPECT_NEAR(norm_squared(c), 1.0, 1e-14);
    EXPECT_NEAR(norm_quadrature(c, default_norm_quadrature(c)), 1.0, 1e-10);
    EXPECT_EQ(c.components[2].momentum, -12.0);
    EXPECT_EQ(c.components[3].momentum, 12.0);
}

TEST(states, extent_and_common_width) {
    WarningCapture quiet;
    EXPECT_DOUBLE_EQ(position_extent(build_psi({8, 10.0}, 3.0, 0.25, kUnit)), 24.0);
    StateSpec mixed = build_cat(1.0, 1.0, kUnit);
    mixed.components[1].xi = 2.0;
    EXPECT_THROW(mixed.common_xi(), InvalidArgument);
    EXPECT_THROW(norm_squared(mixed), InvalidArgument);
}

TEST(states, invalid_inputs) {
    EXPECT_THROW(build_cat(1.0, 0.0, kUnit), InvalidArgument);
    EXPECT_THROW(build_cat(1.0, -1.0, kUnit), InvalidArgument);
    EXPECT_THROW(build_cat(NAN, 1.0, kUnit), InvalidArgument);
    EXPECT_THROW(build_psi({8, 10.0}, 0.0, 0.25, kUnit), InvalidArgument);
    EXPECT_THROW(build_psi({8, 10.0}, 3.0, 0.25, PhysicalConstants{0.0}), InvalidArgument);
    EXPECT_THROW(build_compass(0.0, 1.0, 1.0, kUnit), InvalidArgument);
    EXPECT_THROW(normalize(StateSpec{{{0.0, 1.0, {0.0, 0.0}, 0.0}}, kUnit, false}), InvalidArgument);
    EXPECT_THROW(validate(StateSpec{}), InvalidArgument);
}
