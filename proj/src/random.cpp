// SPDX-License-Identifier: Apache-2.0
#include "dris/random.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace dris {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
    for (auto& word : s_) {
        word = splitmix64(seed);
        seed += 0x9e3779b97f4a7c15ULL;
    }
}

namespace {
constexpr double kUnit = 0x1.0p-53;
}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

// Marsaglia polar method: one accepted pair is exactly one CN sample.
Complex RandomStream::complex_normal(double variance) {
    for (;;) {
        const double u = 2.0 * static_cast<double>(engine_() >> 11) * kUnit - 1.0;
        const double v = 2.0 * static_cast<double>(engine_() >> 11) * kUnit - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            const double f = std::sqrt(-variance * std::log(s) / s);
            return {u * f, v * f};
        }
    }
}

double RandomStream::uniform_phase() { return wrap_phase(kTwoPi * uniform()); }

double RandomStream::uniform() { return static_cast<double>(engine_() >> 11) * kUnit; }

int RandomStream::uniform_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

}  // namespace dris
