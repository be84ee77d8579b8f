// SPDX-License-Identifier: Apache-2.0
#include "dris/channel.hpp"

#include <stdexcept>

namespace dris {

double pathloss_nlos_db(double distance_m, double carrier_ghz) {
    if (!(distance_m >= 1.0) || !std::isfinite(distance_m)) {
        throw ValidationError("distance", "pathloss model needs d >= 1 m, got " + std::to_string(distance_m));
    }
    if (!(carrier_ghz > 0.0) || !std::isfinite(carrier_ghz)) {
        throw ValidationError("carrier_ghz", "must be positive");
    }
    return 33.0 + 25.5 * std::log10(distance_m) + 20.0 * std::log10(carrier_ghz);
}

double pathloss_nlos_gain(double distance_m, double carrier_ghz) {
    return db_to_linear(-pathloss_nlos_db(distance_m, carrier_ghz));
}

namespace {

double leg_gain(const char* name, const Position& a, const Position& b, double f) {
    const double d = distance(a, b);
    if (d == 0.0) throw ValidationError(name, "endpoints coincide");
    return pathloss_nlos_gain(d, f);
}

}  // namespace

LinkBudget derive_link_budget(const ScenarioConfig& cfg) {
    const auto& o = cfg.budget;
    const double f = cfg.carrier_ghz;
    auto pick = [](const std::optional<double>& over, auto derive) {
        return over ? *over : derive();
    };
    LinkBudget b;
    b.sigma_d2 = pick(o.sigma_d2, [&] { return leg_gain("geom.bs/geom.ue", cfg.bs, cfg.ue, f); });
    b.sigma_qa2 = pick(o.sigma_qa2, [&] { return leg_gain("geom.bs/geom.dris", cfg.bs, cfg.dris, f); });
    b.sigma_ga2 = pick(o.sigma_ga2, [&] { return leg_gain("geom.dris/geom.ue", cfg.dris, cfg.ue, f); });
    b.sigma_qe2 = pick(o.sigma_qe2, [&] { return leg_gain("geom.bs/geom.aris", cfg.bs, cfg.aris, f); });
    b.sigma_ge2 = pick(o.sigma_ge2, [&] { return leg_gain("geom.aris/geom.ue", cfg.aris, cfg.ue, f); });
    b.sigma_gv2 = pick(o.sigma_gv2, [&] { return leg_gain("geom.aris/geom.eve", cfg.aris, cfg.eve, f); });
    b.sigma_w2 = pick(o.sigma_w2, [&] { return db_to_linear(cfg.noise_dbm); });
    b.tx_power = pick(o.tx_power, [&] { return db_to_linear(cfg.p_max_dbm); });
    b.validate();
    return b;
}

ChannelRealization sample_realization(const LinkBudget& budget, int m_a, int m_e, RandomStream& rng) {
    if (m_a < 1) throw ValidationError("m_a", "must be at least 1");
    if (m_e < 1) throw ValidationError("m_e", "must be at least 1");
    ChannelRealization r;
    auto fill = [&rng](std::vector<Complex>& v, int m, double var) {
        v.resize(static_cast<std::size_t>(m));
        for (auto& c : v) c = rng.complex_normal(var);
    };
    r.h_d = rng.complex_normal(budget.sigma_d2);
    fill(r.q_a, m_a, budget.sigma_qa2);
    fill(r.g_a, m_a, budget.sigma_ga2);
    fill(r.q_e, m_e, budget.sigma_qe2);
    fill(r.g_e, m_e, budget.sigma_ge2);
    fill(r.g_v, m_e, budget.sigma_gv2);
    return r;
}

Complex cascaded_response(const std::vector<double>& phases, const std::vector<Complex>& leg1,
                          const std::vector<Complex>& leg2) {
    if (phases.size() != leg1.size() || leg1.size() != leg2.size()) {
        throw std::invalid_argument("cascaded_response: length mismatch (" +
                                    std::to_string(phases.size()) + ", " +
                                    std::to_string(leg1.size()) + ", " +
                                    std::to_string(leg2.size()) + ")");
    }
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < phases.size(); ++i) {
        const Complex t = unit_phasor(phases[i]) * leg1[i] * leg2[i];
        re += t.real();
        im += t.imag();
    }
    return {re, im};
}

EffectiveChannels effective_channels(const ChannelRealization& real, const RisPanel& dris,
                                     const RisPanel& adv) {
    EffectiveChannels e;
    e.h_d = real.h_d;
    e.h_a = cascaded_response(dris.static_phases, real.q_a, real.g_a);
    e.h_a_dl = e.h_a * unit_phasor(dris.phi_dl);
    e.h_a_ul = e.h_a * unit_phasor(dris.phi_ul);
    e.theta_dl = std::arg(e.h_a_dl);
    e.theta_ul = std::arg(e.h_a_ul);
    // both Eve cascades share the panel phases and the Eve leg
    const std::size_t m = adv.static_phases.size();
    if (real.g_v.size() != m || real.g_e.size() != m || real.q_e.size() != m) {
        throw std::invalid_argument("effective_channels: adversarial panel size differs from its legs");
    }
    Complex eu, eb;
    for (std::size_t i = 0; i < m; ++i) {
        const Complex t = unit_phasor(adv.static_phases[i]) * real.g_v[i];
        eu += t * real.g_e[i];
        eb += t * real.q_e[i];
    }
    e.h_e_u = eu;
    e.h_e_b = eb;
    return e;
}

Complex effective_response(const EffectiveChannels& eff, const PhaseSchedule& schedule,
                           const SlotPlan& slot, int n, bool dris_on, bool adv_on) {
    const bool dl = slot.is_dl(n);  // throws out_of_range for foreign indices
    Complex h = eff.h_d;
    if (dris_on) h += unit_phasor(schedule.at(n)) * eff.h_a;
    if (adv_on) h += dl ? eff.h_e_u : eff.h_e_b;
    return h;
}

}  // namespace dris
