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

// Forward-mode dual numbers: a value paired with its derivative along one
// direction. Used to carry dy/dx through the network.

#include <cmath>

namespace qpinn {

template <typename T>
struct Dual {
    T value{};
    T tangent{};

    constexpr Dual() = default;
    constexpr Dual(T v) : value(v) {}
    constexpr Dual(T v, T t) : value(v), tangent(t) {}

    static constexpr Dual variable(T v) { return {v, T(1)}; }

    constexpr Dual &operator+=(const Dual &o) {
        value += o.value;
        tangent += o.tangent;
        return *this;
    }
    constexpr Dual &operator-=(const Dual &o) {
        value -= o.value;
        tangent -= o.tangent;
        return *this;
    }
    constexpr Dual &operator*=(const Dual &o) {
        tangent = tangent * o.value + value * o.tangent;
        value *= o.value;
        return *this;
    }
};

template <typename T>
constexpr Dual<T> operator+(Dual<T> a, const Dual<T> &b) {
    return a += b;
}
template <typename T>
constexpr Dual<T> operator-(Dual<T> a, const Dual<T> &b) {
    return a -= b;
}
template <typename T>
constexpr Dual<T> operator-(const Dual<T> &a) {
    return {-a.value, -a.tangent};
}
template <typename T>
constexpr Dual<T> operator*(Dual<T> a, const Dual<T> &b) {
    return a *= b;
}
template <typename T>
constexpr Dual<T> operator*(T s, const Dual<T> &a) {
    return {s * a.value, s * a.tangent};
}
template <typename T>
constexpr Dual<T> operator*(const Dual<T> &a, T s) {
    return {a.value * s, a.tangent * s};
}
template <typename T>
constexpr Dual<T> operator+(const Dual<T> &a, T s) {
    return {a.value + s, a.tangent};
}
template <typename T>
constexpr Dual<T> operator+(T s, const Dual<T> &a) {
    return {s + a.value, a.tangent};
}
template <typename T>
constexpr Dual<T> operator/(const Dual<T> &a, const Dual<T> &b) {
    return {a.value / b.value, (a.tangent * b.value - a.value * b.tangent) / (b.value * b.value)};
}

template <typename T>
Dual<T> tanh(const Dual<T> &a) {
    using std::tanh;
    const T t = tanh(a.value);
    return {t, (T(1) - t * t) * a.tangent};
}
template <typename T>
Dual<T> sin(const Dual<T> &a) {
    using std::cos;
    using std::sin;
    return {sin(a.value), cos(a.value) * a.tangent};
}
template <typename T>
Dual<T> cos(const Dual<T> &a) {
    using std::cos;
    using std::sin;
    return {cos(a.value), -sin(a.value) * a.tangent};
}
template <typename T>
Dual<T> exp(const Dual<T> &a) {
    using std::exp;
    const T e = exp(a.value);
    return {e, e * a.tangent};
}

using DualValue = Dual<double>;

}  // namespace qpinn
