// SPDX-License-Identifier: Apache-2.0
#include "dris/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace dris {

double achievable_rate(const RateInputs& in) {
    if (!(in.eta > 0.0 && in.eta <= 1.0)) throw ValidationError("eta", "must lie in (0, 1]");
    if (!(in.rho >= 0.0)) throw ValidationError("rho", "must be non-negative");
    return in.eta * std::log2(1.0 + in.rho);
}

SnrSet snr_closed_form(const LinkBudget& budget, int m_a, int m_e) {
    budget.validate();
    if (m_a < 0) throw ValidationError("m_a", "must be non-negative");
    if (m_e < 0) throw ValidationError("m_e", "must be non-negative");
    const double w = budget.noise_var();
    SnrSet s;
    s.rho_d = budget.sigma_d2 / w;
    s.rho_eb = m_e * budget.sigma_qe2 * budget.sigma_gv2 / w;
    s.rho_eu = m_e * budget.sigma_ge2 * budget.sigma_gv2 / w;
    s.rho_a = m_a * budget.sigma_qa2 * budget.sigma_ga2 / w;
    return s;
}

double asr_basic(double c_main, double c_eve, double rho_main, double rho_eve) {
    return rho_main > rho_eve ? c_main - c_eve : 0.0;
}

double asr_timed(double c_main, double c_eve, double n_timer, int n_total) {
    if (n_total <= 0) throw ValidationError("n_total", "must be positive");
    if (!(n_timer >= 0.0)) throw ValidationError("n_timer", "must be non-negative");
    const double exposure = std::max(0.0, 1.0 - n_timer / n_total);
    return c_main - exposure * c_eve;
}

double eve_leg_gain(const LinkBudget& budget, EveLink link) {
    return link == EveLink::bs ? budget.sigma_qe2 : budget.sigma_ge2;
}

AsrApprox asr_approx(const SecrecyInputs& in) {
    const SnrSet snr = snr_closed_form(in.budget, in.m_a, in.m_e);
    const double rho_e = snr.rho_e(in.eve_link);
    const double x = in.n_timer / in.n_total;
    const double w = in.budget.noise_var();
    const double d_gain = in.budget.sigma_qa2 * in.budget.sigma_ga2;
    const double e_gain = in.m_e * eve_leg_gain(in.budget, in.eve_link) * in.budget.sigma_gv2;

    AsrApprox out;
    // computed in log space so huge M_a^2 or tiny noise never overflow
    out.printed = in.eta * (std::log2(static_cast<double>(in.m_a) * in.m_a * d_gain) -
                            (1.0 - x) * std::log2(e_gain) - x * std::log2(w));
    out.consistent = in.eta * (std::log2(snr.rho_a) - (1.0 - x) * std::log2(rho_e));
    const double c_a = achievable_rate({in.eta, snr.rho_a});
    const double c_e = achievable_rate({in.eta, rho_e});
    out.exact = c_a - (1.0 - x) * c_e;
    return out;
}

bool feasibility(double n_p, double n_total, double n_timer) {
    if (n_p < 0 || n_total < 0 || n_timer < 0) {
        throw ValidationError("feasibility", "counts must be non-negative");
    }
    return n_p < n_total && n_total <= n_timer;
}

double fake_threshold(const LinkBudget& budget, int m_a) {
    if (m_a < 0) throw ValidationError("m_a", "must be non-negative");
    return m_a * budget.sigma_qa2 * budget.sigma_ga2 + budget.sigma_d2 + budget.noise_var();
}

FakeProb fake_prob(const FakeProbInputs& in) {
    in.budget.validate();
    if (in.m_e < 1) throw ValidationError("m_e", "must be at least 1");
    if (in.n_total <= 0) throw ValidationError("n_total", "must be positive");
    if (!(in.n_n_prime >= 0.0)) throw ValidationError("n_n_prime", "must be non-negative");
    FakeProb p;
    p.beta = fake_threshold(in.budget, in.m_a);
    const double mean_e = in.m_e * eve_leg_gain(in.budget, in.eve_link) * in.budget.sigma_gv2;
    p.p2 = std::exp(-p.beta / mean_e);
    p.p_r = std::max(0.0, 1.0 - in.n_n_prime / in.n_total) * p.p2;
    p.p_r_reciprocal = in.literal_reciprocal ? 1.0 - p.p2 : p.p2;
    return p;
}

}  // namespace dris
