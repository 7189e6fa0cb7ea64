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

#include <cmath>
#include <string>

#include "qpinn/error.hpp"
#include "qpinn/rng.hpp"

namespace qpinn {

Grid::Grid(std::vector<double> xs) : xs_(std::move(xs)) {
    if (xs_.size() < 2) {
        throw InvalidArgument("a grid needs at least 2 points, got " + std::to_string(xs_.size()));
    }
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (!(xs_[i] >= 0.0 && xs_[i] <= 1.0)) {
            throw InvalidArgument("grid point " + std::to_string(i) + " lies outside [0, 1]");
        }
        if (i > 0 && !(xs_[i] > xs_[i - 1])) {
            throw InvalidArgument("grid points must be strictly increasing");
        }
    }
}

Grid make_grid(std::size_t n) {
    if (n < 2) {
        throw InvalidArgument("grid size must be at least 2, got " + std::to_string(n));
    }
    std::vector<double> xs(n);
    const double denom = static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = static_cast<double>(i) / denom;
    }
    return Grid(std::move(xs));
}

FeatureScaling FeatureScaling::fit(std::span<const FeatureRow> raw) {
    if (raw.empty()) {
        throw InvalidArgument("cannot fit feature scaling on zero rows");
    }
    const double n = static_cast<double>(raw.size());
    FeatureScaling out;
    for (std::size_t j = 0; j < kNumFeatures; ++j) {
        double sum = 0.0;
        for (const auto &row : raw) {
            sum += row[j];
        }
        const double mean = sum / n;
        double sq = 0.0;
        for (const auto &row : raw) {
            const double d = row[j] - mean;
            sq += d * d;
        }
        const double sd = std::sqrt(sq / n);
        out.mu[j] = mean;
        out.sigma[j] = sd < kSigmaFloor ? 1.0 : sd;
    }
    return out;
}

FeatureRow FeatureScaling::apply(const FeatureRow &raw) const {
    FeatureRow out;
    for (std::size_t j = 0; j < kNumFeatures; ++j) {
        out[j] = (raw[j] - mu[j]) / sigma[j];
    }
    return out;
}

FeatureRow FeatureScaling::invert(const FeatureRow &standardized) const {
    FeatureRow out;
    for (std::size_t j = 0; j < kNumFeatures; ++j) {
        out[j] = standardized[j] * sigma[j] + mu[j];
    }
    return out;
}

qsim::ProbVector quantum_features(double t, std::uint64_t shots, std::uint64_t seed) {
    const qsim::ProbVector exact = qsim::born_probabilities(qsim::circuit_state(t));
    if (shots == 0) {
        return exact;
    }
    return qsim::counts_to_probabilities(qsim::sample_counts(exact, shots, seed));
}

FeatureMatrix build_feature_matrix(const Grid &grid, std::uint64_t shots, std::uint64_t seed) {
    FeatureMatrix fm;
    fm.raw.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        fm.raw.push_back(quantum_features(grid[i], shots, derive_seed(seed, i)).p);
    }
    fm.scaling = FeatureScaling::fit(fm.raw);
    fm.standardized.reserve(grid.size());
    for (const auto &row : fm.raw) {
        fm.standardized.push_back(fm.scaling.apply(row));
    }
    return fm;
}

FeatureRow exact_standardized_features(double t, const FeatureScaling &scaling) {
    return scaling.apply(quantum_features(t, 0, 0).p);
}

FeatureRow exact_feature_derivative(double t) {
    const double h = 0.5 * std::sin(2.0 * t);
    return {-h, h, -h, h};
}

FeatureDerivatives feature_derivatives(const Grid &grid) {
    FeatureDerivatives out;
    out.dq_dt.reserve(grid.size());
    for (double x : grid.points()) {
        out.dq_dt.push_back(exact_feature_derivative(x));
    }
    return out;
}

}  // namespace qpinn
