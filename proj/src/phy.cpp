// SPDX-License-Identifier: Apache-2.0
#include "dris/phy.hpp"

#include <array>
#include <limits>

namespace dris {

namespace {

std::array<Complex, 4> make_qpsk() {
    std::array<Complex, 4> pts{};
    const double s = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < 4; ++i) {
        const int b0 = (i >> 1) & 1;
        const int b1 = i & 1;
        pts[static_cast<std::size_t>(i)] = {s * (1 - 2 * b0), s * (1 - 2 * b1)};
    }
    return pts;
}

std::array<Complex, 16> make_qam16() {
    std::array<Complex, 16> pts{};
    const double s = 1.0 / std::sqrt(10.0);
    for (int i = 0; i < 16; ++i) {
        const int b0 = (i >> 3) & 1;
        const int b1 = (i >> 2) & 1;
        const int b2 = (i >> 1) & 1;
        const int b3 = i & 1;
        pts[static_cast<std::size_t>(i)] = {s * (1 - 2 * b0) * (2 - (1 - 2 * b2)),
                                            s * (1 - 2 * b1) * (2 - (1 - 2 * b3))};
    }
    return pts;
}

const std::array<Complex, 4> kQpsk = make_qpsk();
const std::array<Complex, 16> kQam16 = make_qam16();

const Complex* points(Constellation c) { return c == Constellation::qam16 ? kQam16.data() : kQpsk.data(); }

}  // namespace

int bits_per_symbol(Constellation c) { return c == Constellation::qam16 ? 4 : 2; }
int constellation_size(Constellation c) { return 1 << bits_per_symbol(c); }

ConstellationSymbol symbol_from_index(int index, Constellation c) {
    if (index < 0 || index >= constellation_size(c)) {
        throw std::out_of_range("constellation label " + std::to_string(index) + " out of range");
    }
    return {points(c)[index], index};
}

std::vector<ConstellationSymbol> map_symbols(const std::vector<std::uint8_t>& bits, Constellation c) {
    const auto k = static_cast<std::size_t>(bits_per_symbol(c));
    if (bits.size() % k != 0) {
        throw std::invalid_argument("map_symbols: " + std::to_string(bits.size()) +
                                    " bits is not a multiple of " + std::to_string(k));
    }
    std::vector<ConstellationSymbol> out;
    out.reserve(bits.size() / k);
    for (std::size_t i = 0; i < bits.size(); i += k) {
        int label = 0;
        for (std::size_t b = 0; b < k; ++b) {
            if (bits[i + b] > 1) throw std::invalid_argument("map_symbols: bit values must be 0 or 1");
            label = (label << 1) | bits[i + b];
        }
        out.push_back(symbol_from_index(label, c));
    }
    return out;
}

std::vector<std::uint8_t> demap_symbols(const std::vector<ConstellationSymbol>& symbols, Constellation c) {
    const int k = bits_per_symbol(c);
    std::vector<std::uint8_t> out;
    out.reserve(symbols.size() * static_cast<std::size_t>(k));
    for (const auto& s : symbols) {
        for (int b = k - 1; b >= 0; --b) out.push_back(static_cast<std::uint8_t>((s.index >> b) & 1));
    }
    return out;
}

PrecoderPair build_precoders(Complex h_a_dl, Complex h_a_ul) {
    if (h_a_dl == Complex{}) throw ValidationError("h_a_dl", "zero DL channel has no phase");
    if (h_a_ul == Complex{}) throw ValidationError("h_a_ul", "zero UL channel has no phase");
    PrecoderPair p;
    p.theta_dl = std::arg(h_a_dl);
    p.theta_ul = std::arg(h_a_ul);
    p.v_b_dl = std::conj(h_a_dl);
    p.v_b_ul = unit_phasor(p.theta_ul);
    p.v_b = p.v_b_dl * p.v_b_ul;
    p.v_u_ul = std::conj(h_a_ul);
    p.v_u_dl = unit_phasor(p.theta_dl);
    p.v_u = p.v_u_ul * p.v_u_dl;
    p.combiner_ue = unit_phasor(-p.theta_ul);
    p.combiner_bs = unit_phasor(-p.theta_dl);
    return p;
}

PrecoderPair build_polluted_precoders(Complex h_a_dl, Complex h_a_ul, Complex h_e_dl, Complex h_e_ul) {
    const Complex dl = h_a_dl + h_e_dl;
    const Complex ul = h_a_ul + h_e_ul;
    if (dl == Complex{}) throw ValidationError("h_a_dl+h_e_dl", "zero polluted DL composite");
    if (ul == Complex{}) throw ValidationError("h_a_ul+h_e_ul", "zero polluted UL composite");
    return build_precoders(dl, ul);
}

ReceivedSample transmit(const ConstellationSymbol& symbol, Complex precoder, Complex channel,
                        Complex interference, double noise_var, RandomStream& rng, int n) {
    if (!(noise_var >= 0.0)) throw ValidationError("noise_var", "must be non-negative");
    ReceivedSample s;
    s.n = n;
    s.y = channel * precoder * symbol.value + interference;
    if (noise_var > 0.0) s.y += rng.complex_normal(noise_var);
    s.z = s.y;
    return s;
}

ReceivedSample combine(const ReceivedSample& sample, double theta) {
    ReceivedSample out = sample;
    out.z = unit_phasor(-theta) * sample.y;
    return out;
}

ConstellationSymbol decide(Complex z, double reference_gain, Constellation c) {
    if (!(reference_gain > 0.0) || !std::isfinite(reference_gain)) {
        throw ValidationError("reference_gain", "must be positive and finite");
    }
    const Complex r = z / reference_gain;
    const Complex* pts = points(c);
    const int size = constellation_size(c);
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < size; ++i) {
        const double d = std::norm(r - pts[i]);
        if (d < best_d) {  // strict: earlier labels win ties
            best_d = d;
            best = i;
        }
    }
    return {pts[best], best};
}

double symbol_error_rate(const std::vector<ConstellationSymbol>& sent,
                         const std::vector<ConstellationSymbol>& decided) {
    if (sent.empty()) throw std::invalid_argument("symbol_error_rate: empty input");
    if (sent.size() != decided.size()) {
        throw std::invalid_argument("symbol_error_rate: lengths differ");
    }
    std::size_t errors = 0;
    for (std::size_t i = 0; i < sent.size(); ++i) errors += sent[i].index != decided[i].index;
    return static_cast<double>(errors) / static_cast<double>(sent.size());
}

}  // namespace dris
