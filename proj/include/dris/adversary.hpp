// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "dris/common.hpp"
#include "dris/phy.hpp"
#include "dris/random.hpp"
#include "dris/scenario.hpp"

namespace dris {

/// Discovery-timer model of Eve's precoder and combiner search.
struct EveState {
    AdversaryTiming timing;
    bool reciprocal = false;  // one shared precoder to find, timer N_r
    int elapsed = 0;          // active symbols in the current epoch
    bool knows_precoders = false;
    bool knows_combiners = false;
    std::vector<ConstellationSymbol> injected_stream;
};

EveState make_eve_state(const AdversaryTiming& timing, bool reciprocal);
EveState advance(EveState state, int symbols);
/// Fresh dynamic phases expire everything Eve has learned.
EveState reset_epoch(EveState state);

/// y_e = h * transmitted + w_e. `transmitted` already includes any precoder.
Complex eavesdrop(Complex transmitted, Complex h_toward_eve, double noise_var, RandomStream& rng);

/// Eve's symbol decision. She knows her own cascade perfectly and, once the
/// timer fired, the transmitter's precoder too.
ConstellationSymbol eve_decide(Complex y_e, Complex h_toward_eve, std::optional<Complex> known_precoder,
                               Constellation c);

/// MRT-precoded false symbol as seen at the legitimate receiver: |h_e|^2 x_e.
/// Once Eve knows the combiners she pre-rotates by the receiver's combiner
/// phase so the fake survives the de-rotation.
Complex inject(const ConstellationSymbol& fake, Complex h_e, const EveState& state,
               double receiver_combiner_theta);

struct ActivationPlan {
    int eve_active_from = 0;
    bool mirrors_dris = false;  // dark at p0 together with the D-RIS
};

ActivationPlan pollute_cep(const EveState& state, int dris_active_from);

}  // namespace dris
