// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "dris/common.hpp"
#include "dris/random.hpp"
#include "dris/scenario.hpp"

namespace dris {

struct ConstellationSymbol {
    Complex value;
    int index = 0;

    bool operator==(const ConstellationSymbol&) const = default;
};

int bits_per_symbol(Constellation c);
int constellation_size(Constellation c);
/// Gray-mapped point for label `index`, bits read MSB first.
ConstellationSymbol symbol_from_index(int index, Constellation c);

std::vector<ConstellationSymbol> map_symbols(const std::vector<std::uint8_t>& bits, Constellation c);
std::vector<std::uint8_t> demap_symbols(const std::vector<ConstellationSymbol>& symbols, Constellation c);

struct PrecoderPair {
    Complex v_b;
    Complex v_b_dl;  // conj(h_dl)
    Complex v_b_ul;  // exp(j theta_ul)
    Complex v_u;
    Complex v_u_ul;  // conj(h_ul)
    Complex v_u_dl;  // exp(j theta_dl)
    double theta_dl = 0.0;
    double theta_ul = 0.0;
    Complex combiner_ue;  // exp(-j theta_ul), applied on DL
    Complex combiner_bs;  // exp(-j theta_dl), applied on UL
};

/// Throws ValidationError naming the link when a channel is exactly zero.
PrecoderPair build_precoders(Complex h_a_dl, Complex h_a_ul);
PrecoderPair build_polluted_precoders(Complex h_a_dl, Complex h_a_ul, Complex h_e_dl, Complex h_e_ul);

struct ReceivedSample {
    Complex y;
    Complex z;
    int n = 0;
};

/// y = channel * precoder * x + interference + w with w ~ CN(0, noise_var).
/// No random draw is taken when noise_var is zero.
ReceivedSample transmit(const ConstellationSymbol& symbol, Complex precoder, Complex channel,
                        Complex interference, double noise_var, RandomStream& rng, int n = 0);

/// z = exp(-j theta) y
ReceivedSample combine(const ReceivedSample& sample, double theta);

/// Nearest point to z / reference_gain; ties resolve to the lowest label.
ConstellationSymbol decide(Complex z, double reference_gain, Constellation c);

double symbol_error_rate(const std::vector<ConstellationSymbol>& sent,
                         const std::vector<ConstellationSymbol>& decided);

}  // namespace dris
