// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "dris/common.hpp"

namespace dris {

std::uint64_t splitmix64(std::uint64_t x);

/// xoshiro256**, a UniformRandomBitGenerator seeded through splitmix64.
class Xoshiro256 {
  public:
    using result_type = std::uint64_t;
    explicit Xoshiro256(std::uint64_t seed);
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() {
        const std::uint64_t out = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return out;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

/// Independent pseudo-random stream keyed by (seed, stream id).
///
/// The engine state is a pure function of the key, so trial workers can
/// reconstruct any trial's stream without coordination.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

    /// Draw from CN(0, variance): real and imaginary parts each carry variance/2.
    Complex complex_normal(double variance);
    double uniform_phase();
    double uniform();
    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi);
    bool bit() { return (engine_() >> 63) != 0; }

  private:
    Xoshiro256 engine_;
};

}  // namespace dris
