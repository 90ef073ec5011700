// Copyright 2026 The qgan developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace qgan {

using cplx = std::complex<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// Version stamp written into every emitted JSON document.
inline constexpr int schema_version = 1;

/// Thrown when a caller violates a documented precondition.
class contract_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a run cannot continue (non-finite values, I/O failure).
class run_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool cond, const std::string &msg) {
    if (!cond) {
        throw contract_error(msg);
    }
}

} // namespace detail

/// Deterministic random source. All floating-point draws are derived from
/// the raw 64-bit engine output so that sequences depend only on the seed,
/// not on the standard library's distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform rotation angle in [0, 2*pi).
    double uniform_angle() { return uniform01() * two_pi; }

    /// Uniform index in [0, n). Modulo bias is negligible for n << 2^64.
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(engine_() % n);
    }

  private:
    std::mt19937_64 engine_;
};

/// Parity of the set bits of x: +1 for even, -1 for odd.
inline double parity_sign(std::uint64_t x) {
    return (std::popcount(x) & 1U) ? -1.0 : 1.0;
}

} // namespace qgan
