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

// Fixed two-qubit statevector engine.
//
// Basis index k = 2*b0 + b1, where b0 is qubit 0 (the Hadamard qubit) and is
// written as the LEFT bit of the label "b0b1". Amplitude order is therefore
// |00>, |01>, |10>, |11>.

#include <array>
#include <complex>
#include <cstdint>
#include <string_view>

namespace qpinn::qsim {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kNumQubits = 2;
inline constexpr std::size_t kNumOutcomes = 4;
inline constexpr std::array<std::string_view, kNumOutcomes> kOutcomeLabels{"00", "01", "10", "11"};

struct SingleQubitGate {
    std::array<std::array<Amplitude, 2>, 2> m{};

    SingleQubitGate adjoint() const;
    SingleQubitGate operator*(const SingleQubitGate &rhs) const;

    /// Largest entrywise deviation of G*G^dagger from the identity.
    double unitarity_error() const;
};

struct StateVector {
    std::array<Amplitude, kNumOutcomes> amps{};

    /// Computational basis state |k>.
    static StateVector basis(std::size_t k);

    double norm_squared() const;
};

/// Outcome probabilities ordered [P(00), P(01), P(10), P(11)].
struct ProbVector {
    std::array<double, kNumOutcomes> p{};

    double sum() const;
    double operator[](std::size_t k) const { return p[k]; }
};

using Counts = std::array<std::uint64_t, kNumOutcomes>;

SingleQubitGate identity_gate();
SingleQubitGate hadamard();

/// Rx(theta) = exp(-i theta X / 2) = cos(theta/2) I - i sin(theta/2) X.
SingleQubitGate rx(double theta);

/// Applies `gate` to `qubit` (0 or 1) and the identity to the other qubit.
/// Throws InvalidArgument for any other qubit index.
StateVector apply_single(const StateVector &state, const SingleQubitGate &gate, std::size_t qubit);

/// (Rx(-2t) (x) Rx(-2t)) (H (x) I) |00>.
StateVector circuit_state(double t);

ProbVector born_probabilities(const StateVector &state);

/// Draws `shots` independent outcomes from the categorical distribution `p`
/// using Xoshiro256 seeded with `seed`. Outcomes with zero probability are
/// never drawn. Throws InvalidArgument when shots == 0 or `p` is not a
/// probability vector.
Counts sample_counts(const ProbVector &p, std::uint64_t shots, std::uint64_t seed);

/// counts / total.
ProbVector counts_to_probabilities(const Counts &counts);

}  // namespace qpinn::qsim
