// SPDX-License-Identifier: Apache-2.0
#include "dris/adversary.hpp"

namespace dris {

namespace {

void refresh_flags(EveState& s) {
    const int precoder_timer = s.reciprocal ? s.timing.n_r : s.timing.n_n;
    s.knows_precoders = s.elapsed >= precoder_timer;
    // in the reciprocal case the combiner is the precoder phase itself
    s.knows_combiners = s.reciprocal ? s.knows_precoders
                                     : (s.knows_precoders && s.elapsed >= s.timing.n_n_prime);
}

}  // namespace

EveState make_eve_state(const AdversaryTiming& timing, bool reciprocal) {
    timing.validate();
    EveState s;
    s.timing = timing;
    s.reciprocal = reciprocal;
    refresh_flags(s);
    return s;
}

EveState advance(EveState state, int symbols) {
    if (symbols < 0) throw ValidationError("symbols", "must be non-negative");
    state.elapsed += symbols;
    refresh_flags(state);
    return state;
}

EveState reset_epoch(EveState state) {
    state.elapsed = 0;
    state.injected_stream.clear();
    refresh_flags(state);
    return state;
}

Complex eavesdrop(Complex transmitted, Complex h_toward_eve, double noise_var, RandomStream& rng) {
    Complex y = h_toward_eve * transmitted;
    if (noise_var > 0.0) y += rng.complex_normal(noise_var);
    return y;
}

ConstellationSymbol eve_decide(Complex y_e, Complex h_toward_eve, std::optional<Complex> known_precoder,
                               Constellation c) {
    Complex g = h_toward_eve;
    if (known_precoder) g *= *known_precoder;
    const double mag = std::abs(g);
    if (mag == 0.0) return decide(Complex{}, 1.0, c);
    return decide(y_e * std::conj(g) / mag, mag, c);
}

Complex inject(const ConstellationSymbol& fake, Complex h_e, const EveState& state,
               double receiver_combiner_theta) {
    Complex term = std::norm(h_e) * fake.value;
    if (state.knows_combiners) term *= unit_phasor(receiver_combiner_theta);
    return term;
}

ActivationPlan pollute_cep(const EveState& state, int dris_active_from) {
    if (state.timing.mode != AdversaryMode::pollute_cep) {
        return {state.timing.activation_symbol, false};
    }
    return {dris_active_from, true};
}

}  // namespace dris
