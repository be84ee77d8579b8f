// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dris/scenario.hpp"

namespace dris {

struct RateInputs {
    double eta = 1.0;
    double rho = 0.0;
};

/// C = eta log2(1 + rho)
double achievable_rate(const RateInputs& in);

/// Mean-gain SNRs. Noise is referred to the transmit power (sigma_w2 / P).
struct SnrSet {
    double rho_d = 0.0;
    double rho_eb = 0.0;
    double rho_eu = 0.0;
    double rho_a = 0.0;

    double rho_e(EveLink link) const { return link == EveLink::bs ? rho_eb : rho_eu; }
};

SnrSet snr_closed_form(const LinkBudget& budget, int m_a, int m_e);

double asr_basic(double c_main, double c_eve, double rho_main, double rho_eve);

/// C_main - (1 - n_timer/N) C_eve. The exposure factor is clamped at 0 when
/// the timer exceeds the slot.
double asr_timed(double c_main, double c_eve, double n_timer, int n_total);

struct SecrecyInputs {
    LinkBudget budget;
    int m_a = 1;
    int m_e = 1;
    double eta = 1.0;
    double n_timer = 0.0;
    int n_total = 1;
    EveLink eve_link = EveLink::ue;
};

struct AsrApprox {
    double printed = 0.0;     // M_a^2 numerator as published
    double consistent = 0.0;  // eta [log2 rho_a - (1 - x) log2 rho_e]
    double exact = 0.0;       // asr_timed on log2(1 + rho)
};

AsrApprox asr_approx(const SecrecyInputs& in);

/// N_p < N <= N_timer
bool feasibility(double n_p, double n_total, double n_timer);

/// beta = M_a sigma_qa2 sigma_ga2 + sigma_d2 + sigma_w2 / P
double fake_threshold(const LinkBudget& budget, int m_a);

struct FakeProbInputs {
    LinkBudget budget;
    int m_a = 1;
    int m_e = 1;
    EveLink eve_link = EveLink::ue;
    int n_total = 1;
    double n_n_prime = 0.0;
    bool literal_reciprocal = false;
};

struct FakeProb {
    double beta = 0.0;
    double p2 = 0.0;
    double p_r = 0.0;
    double p_r_reciprocal = 0.0;  // P_2, or 1 - P_2 when literal_reciprocal is set
};

FakeProb fake_prob(const FakeProbInputs& in);

/// Per-element Eve-side leg gain selected by the attacked link.
double eve_leg_gain(const LinkBudget& budget, EveLink link);

}  // namespace dris
