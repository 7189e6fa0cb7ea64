// Copyright 2026 The qpinn Authors
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

#include "qpinn/features.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qpinn/error.hpp"

using namespace qpinn;

TEST(Grid, uniform_points) {
    EXPECT_EQ(make_grid(2).points(), (std::vector<double>{0.0, 1.0}));
    EXPECT_EQ(make_grid(5).points(), (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
    EXPECT_THROW(make_grid(1), InvalidArgument);
    EXPECT_THROW(make_grid(0), InvalidArgument);
}

TEST(Grid, enforces_invariants) {
    EXPECT_THROW(Grid({0.0}), InvalidArgument);
    EXPECT_THROW(Grid({0.0, 0.0}), InvalidArgument);
    EXPECT_THROW(Grid({0.5, 0.2}), InvalidArgument);
    EXPECT_THROW(Grid({0.0, 1.5}), InvalidArgument);
    EXPECT_THROW(Grid({-0.1, 0.5}), InvalidArgument);
    EXPECT_NO_THROW(Grid({0.1, 0.2, 0.9}));
}

TEST(QuantumFeatures, exact_mode_closed_form) {
    const auto p0 = quantum_features(0.0, 0, 0);
    EXPECT_NEAR(p0[0], 0.5, 1e-15);
    EXPECT_NEAR(p0[1], 0.0, 1e-15);
    EXPECT_NEAR(p0[2], 0.5, 1e-15);
    EXPECT_NEAR(p0[3], 0.0, 1e-15);

    // cos^2(0.3)/2 and sin^2(0.3)/2 at high precision.
    constexpr double kC = 0.45633390372741957431;
    constexpr double kS = 0.04366609627258042569;
    const auto p = quantum_features(0.3, 0, 0);
    EXPECT_NEAR(p[0], 0.45633, 5e-6);
    EXPECT_NEAR(p[1], 0.04367, 5e-6);
    EXPECT_NEAR(p[0], kC, 1e-15);
    EXPECT_NEAR(p[1], kS, 1e-15);
    EXPECT_NEAR(p[2], kC, 1e-15);
    EXPECT_NEAR(p[3], kS, 1e-15);
}

TEST(QuantumFeatures, sampled_mode_sums_to_one) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        EXPECT_EQ(quantum_features(0.1 * static_cast<double>(seed % 10), 4096, seed).sum(), 1.0);
        EXPECT_EQ(quantum_features(0.42, 1000 + seed, seed).sum(), 1.0);
    }
}

TEST(FeatureMatrix, two_point_grid) {
    const FeatureMatrix fm = build_feature_matrix(make_grid(2), 0, 0);
    ASSERT_EQ(fm.rows(), 2u);
    EXPECT_NEAR(fm.raw[0][0], 0.5, 1e-15);
    EXPECT_NEAR(fm.raw[0][1], 0.0, 1e-15);
    EXPECT_NEAR(fm.raw[0][2], 0.5, 1e-15);
    EXPECT_NEAR(fm.raw[0][3], 0.0, 1e-15);
}

TEST(FeatureMatrix, standardized_columns) {
    const Grid grid = make_grid(64);
    const FeatureMatrix fm = build_feature_matrix(grid, 0, 0);
    for (std::size_t j = 0; j < kNumFeatures; ++j) {
        double mean = 0.0;
        for (const auto &row : fm.standardized) mean += row[j];
        mean /= static_cast<double>(fm.rows());
        double var = 0.0;
        for (const auto &row : fm.standardized) var += (row[j] - mean) * (row[j] - mean);
        var /= static_cast<double>(fm.rows());
        EXPECT_NEAR(mean, 0.0, 1e-10) << j;
        EXPECT_NEAR(std::sqrt(var), 1.0, 1e-10) << j;
    }
    for (std::size_t i = 0; i < fm.rows(); ++i) {
        EXPECT_NEAR(fm.raw[i][0], 0.5 * std::cos(grid[i]) * std::cos(grid[i]), 1e-12);
        EXPECT_NEAR(fm.raw[i][1], 0.5 * std::sin(grid[i]) * std::sin(grid[i]), 1e-12);
        EXPECT_EQ(fm.raw[i][0], fm.raw[i][2]);
        EXPECT_EQ(fm.standardized[i][0], fm.standardized[i][2]);
        EXPECT_EQ(fm.standardized[i][1], fm.standardized[i][3]);
        const FeatureRow back = fm.scaling.invert(fm.standardized[i]);
        for (std::size_t j = 0; j < kNumFeatures; ++j) {
            EXPECT_NEAR(back[j], fm.raw[i][j], 1e-12);
        }
    }
}

TEST(FeatureMatrix, sigma_floor_keeps_constant_columns_centred) {
    const std::vector<FeatureRow> raw{{0.5, 0.1, 0.25, 0.15}, {0.5, 0.3, 0.25, -0.05}};
    const FeatureScaling s = FeatureScaling::fit(raw);
    EXPECT_EQ(s.sigma[0], 1.0);
    EXPECT_EQ(s.sigma[2], 1.0);
    EXPECT_NEAR(s.sigma[1], 0.1, 1e-15);
    EXPECT_NEAR(s.mu[1], 0.2, 1e-15);
    const FeatureRow z = s.apply(raw[0]);
    EXPECT_EQ(z[0], 0.0);
    EXPECT_NEAR(z[1], -1.0, 1e-12);
    EXPECT_THROW(FeatureScaling::fit(std::vector<FeatureRow>{}), InvalidArgument);
}

TEST(FeatureMatrix, deterministic_per_seed) {
    const Grid grid = make_grid(16);
    const FeatureMatrix a = build_feature_matrix(grid, 4096, 9);
    const FeatureMatrix b = build_feature_matrix(grid, 4096, 9);
    EXPECT_EQ(a.raw, b.raw);
    EXPECT_EQ(a.standardized, b.standardized);
    EXPECT_NE(build_feature_matrix(grid, 4096, 10).raw, a.raw);
    for (const auto &row : a.raw) {
        EXPECT_EQ(row[0] + row[1] + row[2] + row[3], 1.0);
    }
}

TEST(FeatureMatrix, points_are_sampled_independently) {
    // Two grid points with the same t must not reuse a seed.
    const FeatureMatrix fm = build_feature_matrix(Grid({0.0, 0.5, 1.0}), 4096, 3);
    const auto again = quantum_features(0.5, 4096, 3);
    EXPECT_NE(fm.raw[1], again.p);
}

TEST(FeatureMatrix, sampled_approaches_exact) {
    const Grid grid = make_grid(8);
    const FeatureMatrix exact = build_feature_matrix(grid, 0, 0);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const FeatureMatrix sampled = build_feature_matrix(grid, 1'000'000, seed);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            for (std::size_t j = 0; j < kNumFeatures; ++j) {
                EXPECT_LE(std::abs(sampled.raw[i][j] - exact.raw[i][j]), 5e-3);
            }
        }
    }
}

TEST(FeatureDerivatives, special_points) {
    const FeatureRow zero = exact_feature_derivative(0.0);
    for (double v : zero) EXPECT_EQ(v, 0.0);

    const FeatureRow quarter = exact_feature_derivative(std::numbers::pi / 4);
    EXPECT_NEAR(quarter[0], -0.5, 1e-15);
    EXPECT_NEAR(quarter[1], 0.5, 1e-15);
    EXPECT_NEAR(quarter[2], -0.5, 1e-15);
    EXPECT_NEAR(quarter[3], 0.5, 1e-15);
}

TEST(FeatureDerivatives, match_finite_differences) {
    const Grid grid = make_grid(33);
    const FeatureDerivatives d = feature_derivatives(grid);
    ASSERT_EQ(d.dq_dt.size(), grid.size());
    constexpr double h = 1e-6;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto plus = quantum_features(grid[i] + h, 0, 0);
        const auto minus = quantum_features(grid[i] - h, 0, 0);
        double row_sum = 0.0;
        for (std::size_t j = 0; j < kNumFeatures; ++j) {
            EXPECT_NEAR(d.dq_dt[i][j], (plus[j] - minus[j]) / (2 * h), 1e-8);
            row_sum += d.dq_dt[i][j];
        }
        EXPECT_NEAR(row_sum, 0.0, 1e-12);
    }
}

TEST(FeatureScaling, frozen_statistics_reused_on_new_points) {
    const FeatureMatrix fm = build_feature_matrix(make_grid(64), 0, 0);
    const FeatureRow z = exact_standardized_features(0.5, fm.scaling);
    const FeatureRow expected = fm.scaling.apply(quantum_features(0.5, 0, 0).p);
    EXPECT_EQ(z, expected);
}
