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

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qpinn/qsim.hpp"

namespace qpinn {

inline constexpr std::size_t kNumFeatures = qsim::kNumOutcomes;

using FeatureRow = std::array<double, kNumFeatures>;

/// Columns whose standard deviation falls below this are only mean-centred.
inline constexpr double kSigmaFloor = 1e-8;

/// Strictly increasing collocation points in [0, 1], at least two of them.
class Grid {
   public:
    /// Throws InvalidArgument unless the invariants hold.
    explicit Grid(std::vector<double> xs);

    const std::vector<double> &points() const { return xs_; }
    std::size_t size() const { return xs_.size(); }
    double operator[](std::size_t i) const { return xs_[i]; }

   private:
    std::vector<double> xs_;
};

/// `n` uniformly spaced points from 0 to 1 inclusive. Requires n >= 2.
Grid make_grid(std::size_t n);

/// Per-column affine transform (raw - mu) / sigma.
struct FeatureScaling {
    FeatureRow mu{};
    FeatureRow sigma{1.0, 1.0, 1.0, 1.0};

    /// Column means and population standard deviations (divide by N); any
    /// sigma below kSigmaFloor is replaced by 1.
    static FeatureScaling fit(std::span<const FeatureRow> raw);

    FeatureRow apply(const FeatureRow &raw) const;
    FeatureRow invert(const FeatureRow &standardized) const;
};

struct FeatureMatrix {
    std::vector<FeatureRow> raw;
    std::vector<FeatureRow> standardized;
    FeatureScaling scaling;

    std::size_t rows() const { return raw.size(); }
};

struct FeatureDerivatives {
    /// d(raw probability)/dt per grid point.
    std::vector<FeatureRow> dq_dt;
};

/// Circuit measurement probabilities at t. shots == 0 gives the exact Born
/// probabilities; otherwise counts/shots from a seeded sample.
qsim::ProbVector quantum_features(double t, std::uint64_t shots, std::uint64_t seed);

/// Rows are quantum_features(x_i) with per-point seed derive_seed(seed, i),
/// standardized with statistics fitted on this grid.
FeatureMatrix build_feature_matrix(const Grid &grid, std::uint64_t shots, std::uint64_t seed);

/// Exact-mode raw features standardized with an existing (frozen) scaling.
FeatureRow exact_standardized_features(double t, const FeatureScaling &scaling);

/// d/dt of the exact probabilities: [-sin2t/2, sin2t/2, -sin2t/2, sin2t/2].
FeatureRow exact_feature_derivative(double t);

FeatureDerivatives feature_derivatives(const Grid &grid);

}  // namespace qpinn
