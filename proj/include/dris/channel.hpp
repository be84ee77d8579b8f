// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "dris/common.hpp"
#include "dris/random.hpp"
#include "dris/ris.hpp"
#include "dris/scenario.hpp"

namespace dris {

/// Indoor-factory NLOS pathloss in dB: 33 + 25.5 log10(d) + 20 log10(f_GHz).
double pathloss_nlos_db(double distance_m, double carrier_ghz);
double pathloss_nlos_gain(double distance_m, double carrier_ghz);

/// Geometry-derived link budget; any explicit override in cfg.budget wins.
LinkBudget derive_link_budget(const ScenarioConfig& cfg);

struct ChannelRealization {
    Complex h_d;
    std::vector<Complex> q_a;  // BS - D-RIS
    std::vector<Complex> g_a;  // D-RIS - UE
    std::vector<Complex> q_e;  // BS - adversarial RIS
    std::vector<Complex> g_e;  // UE - adversarial RIS
    std::vector<Complex> g_v;  // adversarial RIS - Eve
};

ChannelRealization sample_realization(const LinkBudget& budget, int m_a, int m_e, RandomStream& rng);

/// sum_m exp(j phi_m) leg1_m leg2_m
Complex cascaded_response(const std::vector<double>& phases, const std::vector<Complex>& leg1,
                          const std::vector<Complex>& leg2);

struct EffectiveChannels {
    Complex h_d;
    Complex h_a;  // static part, before the dynamic phase
    Complex h_a_dl;
    Complex h_a_ul;
    double theta_dl = 0.0;
    double theta_ul = 0.0;
    Complex h_e_u;  // UE - Eve through the adversarial RIS
    Complex h_e_b;  // BS - Eve through the adversarial RIS
};

EffectiveChannels effective_channels(const ChannelRealization& real, const RisPanel& dris,
                                     const RisPanel& adv);

/// h_d + [dris_on] exp(j phi(n)) h_a + [adv_on] h_e, where h_e is the UE-side
/// cascade on DL symbols and the BS-side cascade on UL symbols.
Complex effective_response(const EffectiveChannels& eff, const PhaseSchedule& schedule,
                           const SlotPlan& slot, int n, bool dris_on, bool adv_on);

}  // namespace dris
