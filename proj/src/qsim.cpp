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

#include "qpinn/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qpinn/error.hpp"
#include "qpinn/rng.hpp"

namespace qpinn::qsim {

SingleQubitGate SingleQubitGate::adjoint() const {
    SingleQubitGate out;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            out.m[r][c] = std::conj(m[c][r]);
        }
    }
    return out;
}

SingleQubitGate SingleQubitGate::operator*(const SingleQubitGate &rhs) const {
    SingleQubitGate out;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            out.m[r][c] = m[r][0] * rhs.m[0][c] + m[r][1] * rhs.m[1][c];
        }
    }
    return out;
}

double SingleQubitGate::unitarity_error() const {
    const SingleQubitGate product = *this * adjoint();
    double worst = 0.0;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            const Amplitude expected = r == c ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(product.m[r][c] - expected));
        }
    }
    return worst;
}

StateVector StateVector::basis(std::size_t k) {
    if (k >= kNumOutcomes) {
        throw InvalidArgument("basis index " + std::to_string(k) + " out of range");
    }
    StateVector s;
    s.amps[k] = 1.0;
    return s;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return total;
}

double ProbVector::sum() const {
    double total = 0.0;
    for (double v : p) {
        total += v;
    }
    return total;
}

SingleQubitGate identity_gate() {
    SingleQubitGate g;
    g.m[0][0] = 1.0;
    g.m[1][1] = 1.0;
    return g;
}

SingleQubitGate hadamard() {
    constexpr double h = std::numbers::sqrt2 / 2.0;
    SingleQubitGate g;
    g.m = {{{h, h}, {h, -h}}};
    return g;
}

SingleQubitGate rx(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    SingleQubitGate g;
    g.m = {{{Amplitude(c, 0.0), Amplitude(0.0, -s)}, {Amplitude(0.0, -s), Amplitude(c, 0.0)}}};
    return g;
}

StateVector apply_single(const StateVector &state, const SingleQubitGate &gate, std::size_t qubit) {
    if (qubit >= kNumQubits) {
        throw InvalidArgument("qubit index " + std::to_string(qubit) + " out of range for a 2-qubit register");
    }
    // Qubit 0 is the high bit of the basis index.
    const std::size_t stride = qubit == 0 ? 2 : 1;
    StateVector out = state;
    for (std::size_t k = 0; k < kNumOutcomes; ++k) {
        if (k & stride) {
            continue;
        }
        const Amplitude a0 = state.amps[k];
        const Amplitude a1 = state.amps[k | stride];
        out.amps[k] = gate.m[0][0] * a0 + gate.m[0][1] * a1;
        out.amps[k | stride] = gate.m[1][0] * a0 + gate.m[1][1] * a1;
    }
    return out;
}

StateVector circuit_state(double t) {
    if (!std::isfinite(t)) {
        throw InvalidArgument("circuit parameter must be finite");
    }
    StateVector s = StateVector::basis(0);
    s = apply_single(s, hadamard(), 0);
    const SingleQubitGate rot = rx(-2.0 * t);
    s = apply_single(s, rot, 0);
    s = apply_single(s, rot, 1);
    return s;
}

ProbVector born_probabilities(const StateVector &state) {
    ProbVector out;
    for (std::size_t k = 0; k < kNumOutcomes; ++k) {
        out.p[k] = std::norm(state.amps[k]);
    }
    return out;
}

Counts sample_counts(const ProbVector &p, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw InvalidArgument("shots must be at least 1");
    }
    for (double v : p.p) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw InvalidArgument("probabilities must lie in [0, 1]");
        }
    }
    if (std::abs(p.sum() - 1.0) > 1e-9) {
        throw InvalidArgument("probabilities must sum to 1");
    }

    std::array<double, kNumOutcomes> cumulative{};
    double running = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t k = 0; k < kNumOutcomes; ++k) {
        running += p.p[k];
        cumulative[k] = running;
        if (p.p[k] > 0.0) {
            last_nonzero = k;
        }
    }

    Counts counts{};
    Xoshiro256 rng(seed);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        const double u = rng.uniform();
        // Rounding can leave the cumulative total just below 1; such draws go
        // to the last outcome that can actually occur.
        std::size_t outcome = last_nonzero;
        for (std::size_t k = 0; k < last_nonzero; ++k) {
            if (p.p[k] > 0.0 && u < cumulative[k]) {
                outcome = k;
                break;
            }
        }
        ++counts[outcome];
    }
    return counts;
}

ProbVector counts_to_probabilities(const Counts &counts) {
    std::uint64_t total = 0;
    std::size_t last_nonzero = 0;
    for (std::size_t k = 0; k < kNumOutcomes; ++k) {
        total += counts[k];
        if (counts[k] > 0) {
            last_nonzero = k;
        }
    }
    if (total == 0) {
        throw InvalidArgument("counts are empty");
    }
    ProbVector out;
    double partial = 0.0;
    for (std::size_t k = 0; k < last_nonzero; ++k) {
        out.p[k] = static_cast<double>(counts[k]) / static_cast<double>(total);
        partial += out.p[k];
    }
    // Closing entry chosen so the left-to-right sum is exactly 1.
    out.p[last_nonzero] = 1.0 - partial;
    return out;
}

}  // namespace qpinn::qsim
