// SPDX-License-Identifier: Apache-2.0
#include "dris/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "dris/adversary.hpp"
#include "dris/analysis.hpp"
#include "dris/channel.hpp"
#include "dris/phy.hpp"
#include "dris/random.hpp"
#include "dris/ris.hpp"

namespace dris {

namespace {

struct SlotSetup {
    LinkBudget budget;
    ChannelRealization real;
    RisPanel dris;
    RisPanel adv;
    EffectiveChannels eff;
    PhaseSchedule schedule;
    std::vector<bool> dris_on;
    std::vector<bool> eve_on;
};

bool eve_injects(AdversaryMode mode) {
    return mode == AdversaryMode::inject || mode == AdversaryMode::pollute_cep;
}

SlotSetup setup_slot(const ScenarioConfig& cfg, const EveState& eve, RandomStream& rng) {
    SlotSetup s;
    s.budget = derive_link_budget(cfg);
    s.real = sample_realization(s.budget, cfg.m_a, cfg.m_e, rng);

    const bool coherent = cfg.gain_mode == GainMode::coherent;
    s.dris.m = cfg.m_a;
    s.dris.static_phases = coherent ? align_static_phases(s.real.q_a, s.real.g_a)
                                    : random_static_phases(cfg.m_a, rng);
    s.dris.phi_dl = cfg.phi_dl ? wrap_phase(*cfg.phi_dl) : rng.uniform_phase();
    s.dris.phi_ul = cfg.phi_ul ? wrap_phase(*cfg.phi_ul) : rng.uniform_phase();
    if (cfg.scheme == Scheme::reciprocal) s.dris.phi_ul = s.dris.phi_dl;
    s.dris.active_from = cfg.dris_active_from;

    const auto& eve_leg = cfg.eve_link == EveLink::bs ? s.real.q_e : s.real.g_e;
    s.adv.m = cfg.m_e;
    s.adv.static_phases = coherent ? align_static_phases(s.real.g_v, eve_leg)
                                   : random_static_phases(cfg.m_e, rng);
    const ActivationPlan plan = pollute_cep(eve, cfg.dris_active_from);
    s.adv.active_from = plan.eve_active_from;

    s.eff = effective_channels(s.real, s.dris, s.adv);
    s.schedule = schedule_phases(s.dris, cfg.slot, cfg.scheme == Scheme::nonreciprocal);

    const auto n_total = static_cast<std::size_t>(cfg.slot.n_total);
    s.dris_on.assign(n_total, false);
    s.eve_on.assign(n_total, false);
    for (int n = 0; n < cfg.slot.n_total; ++n) {
        s.dris_on[static_cast<std::size_t>(n)] = panel_on(s.dris, cfg.slot, n, true);
        s.eve_on[static_cast<std::size_t>(n)] =
            cfg.adversary.mode != AdversaryMode::off && panel_on(s.adv, cfg.slot, n, plan.mirrors_dris);
    }
    return s;
}

ConstellationSymbol random_symbol(RandomStream& rng, Constellation c) {
    return symbol_from_index(rng.uniform_int(0, constellation_size(c) - 1), c);
}

bool is_validation(const std::vector<int>& data, int n, int count) {
    for (int i = 0; i < count && i < static_cast<int>(data.size()); ++i) {
        if (data[static_cast<std::size_t>(i)] == n) return true;
    }
    return false;
}

TrialMetrics simulate(const ScenarioConfig& cfg, std::uint64_t trial_index, std::vector<CepTraceEntry>* trace) {
    RandomStream rng(cfg.seed, trial_index);
    EveState eve = make_eve_state(cfg.adversary, cfg.scheme == Scheme::reciprocal);
    const SlotSetup s = setup_slot(cfg, eve, rng);
    const SlotPlan& slot = cfg.slot;
    const double noise = cfg.noiseless ? 0.0 : s.budget.noise_var();
    const double noise_ref = s.budget.noise_var();
    const Constellation c = cfg.constellation;
    const bool reciprocal = cfg.scheme == Scheme::reciprocal;

    TrialMetrics m;
    m.snr_d = std::norm(s.eff.h_d) / noise_ref;
    m.snr_a = std::norm(s.eff.h_a) / noise_ref;
    m.snr_eu = std::norm(s.eff.h_e_u) / noise_ref;
    m.snr_eb = std::norm(s.eff.h_e_b) / noise_ref;
    const Complex h_e_link = cfg.eve_link == EveLink::bs ? s.eff.h_e_b : s.eff.h_e_u;
    m.p2_event = std::norm(h_e_link) > fake_threshold(s.budget, cfg.m_a);
    m.tag = infer_scenario_tag(slot, s.eve_on);

    // --- channel estimation procedure
    const ConstellationSymbol pilot = symbol_from_index(0, c == Constellation::qam16 ? Constellation::qpsk : c);
    std::vector<ReceivedSample> ue_rx;
    std::vector<ReceivedSample> bs_rx;
    for (int n : slot.pilot_indices()) {
        const auto i = static_cast<std::size_t>(n);
        const Complex h = effective_response(s.eff, s.schedule, slot, n, s.dris_on[i], s.eve_on[i]);
        const ReceivedSample rx = transmit(pilot, 1.0, h, {}, noise, rng, n);
        (slot.is_dl(n) ? ue_rx : bs_rx).push_back(rx);
        if (trace) {
            const SymbolRole r = slot.role(n);
            static constexpr const char* names[] = {"dl_data", "dl_p0", "dl_p1", "dl_p2",
                                                    "ul_data", "ul_p0", "ul_p1"};
            trace->push_back({"pilot", slot.is_dl(n) ? "ue" : "bs", names[static_cast<int>(r)], n,
                              s.dris_on[i], s.eve_on[i], ls_estimate(rx.y, pilot), h});
        }
    }
    const CsiResult ue_csi = recover_csi(collect_stages(ue_rx, slot, Side::ue, pilot), m.tag);
    const CsiResult bs_csi = bs_derive_dl(recover_csi(collect_stages(bs_rx, slot, Side::bs, pilot), m.tag), s.dris);
    if (trace) {
        trace->push_back({"recovered", "ue", "h_a_dl", -1, false, false, *ue_csi.h_a_dl_hat, s.eff.h_a_dl});
        trace->push_back({"recovered", "ue", "h_a_ul", -1, false, false, *ue_csi.h_a_ul_hat, s.eff.h_a_ul});
        trace->push_back({"recovered", "ue", "h_d", -1, false, false, ue_csi.h_d_hat, s.eff.h_d});
        trace->push_back({"recovered", "bs", "h_a_ul", -1, false, false, *bs_csi.h_a_ul_hat, s.eff.h_a_ul});
        trace->push_back({"recovered", "bs", "h_a_dl_derived", -1, false, false, *bs_csi.h_a_dl_hat, s.eff.h_a_dl});
        trace->push_back({"recovered", "bs", "h_d", -1, false, false, bs_csi.h_d_hat, s.eff.h_d});
        trace->push_back({"truth", "ue", "h_e_u", -1, false, false, s.eff.h_e_u, s.eff.h_e_u});
        trace->push_back({"truth", "bs", "h_e_b", -1, false, false, s.eff.h_e_b, s.eff.h_e_b});
    }

    Complex ue_dl = *ue_csi.h_a_dl_hat;
    Complex ue_ul = *ue_csi.h_a_ul_hat;
    Complex bs_dl = *bs_csi.h_a_dl_hat;
    Complex bs_ul = *bs_csi.h_a_ul_hat;
    if (cfg.perfect_csi) {
        ue_dl = bs_dl = s.eff.h_a_dl;
        ue_ul = bs_ul = s.eff.h_a_ul;
    }
    // BS precodes with its DL/UL pair, UE with its own
    const PrecoderPair bs_pair = build_precoders(bs_dl, bs_ul);
    const PrecoderPair ue_pair = build_precoders(ue_dl, ue_ul);
    const Complex v_b = reciprocal ? std::conj(bs_dl) : bs_pair.v_b;
    const Complex v_u = reciprocal ? Complex{1.0, 0.0} : ue_pair.v_u;
    const double theta_ue = reciprocal ? 0.0 : ue_pair.theta_ul;
    const double theta_bs = reciprocal ? std::arg(bs_ul) : bs_pair.theta_dl;
    const double gain_ue = std::norm(ue_dl);
    const double gain_bs = reciprocal ? std::abs(bs_ul) : std::norm(bs_ul);

    const bool injects = eve_injects(cfg.adversary.mode);
    const int v = cfg.validation_symbols;
    int val_dl_err = 0;
    int val_ul_err = 0;

    // --- data, symbol by symbol so Eve's timers advance in slot order
    for (int n = 0; n < slot.n_total; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const SymbolRole role = slot.role(n);
        const bool data = role == SymbolRole::dl_data || role == SymbolRole::ul_data;
        if (data) {
            const bool dl = role == SymbolRole::dl_data;
            const bool eve_active = s.eve_on[i];
            const ConstellationSymbol x = random_symbol(rng, c);
            const Complex ch = effective_response(s.eff, s.schedule, slot, n, s.dris_on[i], false);
            const Complex precoder = dl ? v_b : v_u;
            const double theta = dl ? theta_ue : theta_bs;

            Complex interference{};
            std::optional<ConstellationSymbol> fake;
            if (eve_active && injects) {
                fake = random_symbol(rng, c);
                interference = inject(*fake, dl ? s.eff.h_e_u : s.eff.h_e_b, eve, theta);
                eve.injected_stream.push_back(*fake);
            }
            const ReceivedSample rx = combine(transmit(x, precoder, ch, interference, noise, rng, n), theta);
            const ConstellationSymbol got = decide(rx.z, dl ? gain_ue : gain_bs, c);
            const bool err = got.index != x.index;
            if (dl) {
                ++m.dl_symbols;
                m.dl_errors += err;
                if (is_validation(slot.dl_data, n, v)) val_dl_err += err;
            } else {
                ++m.ul_symbols;
                m.ul_errors += err;
                if (is_validation(slot.ul_data, n, v)) val_ul_err += err;
            }
            if (fake) {
                const bool hit = got.index == fake->index;
                if (dl) {
                    ++m.fake_dl_injected;
                    m.fake_dl_decoded += hit;
                } else {
                    ++m.fake_ul_injected;
                    m.fake_ul_decoded += hit;
                }
            }
            if (eve_active) {
                const Complex h_eve = dl ? s.eff.h_e_b : s.eff.h_e_u;
                const Complex y_e = eavesdrop(precoder * x.value, h_eve, noise, rng);
                std::optional<Complex> known;
                if (eve.knows_precoders || (reciprocal && !dl)) known = precoder;
                const bool eve_err = eve_decide(y_e, h_eve, known, c).index != x.index;
                if (dl) {
                    ++m.eve_dl_symbols;
                    m.eve_dl_errors += eve_err;
                } else {
                    ++m.eve_ul_symbols;
                    m.eve_ul_errors += eve_err;
                }
            }
        }
        if (s.eve_on[i]) eve = advance(std::move(eve), 1);
    }

    const int v_dl = std::min<int>(v, static_cast<int>(slot.dl_data.size()));
    const int v_ul = std::min<int>(v, static_cast<int>(slot.ul_data.size()));
    m.validation_symbols = v_dl + v_ul;
    m.validation_errors = val_dl_err + val_ul_err;
    const bool flag_ue = detect_pollution(static_cast<double>(val_dl_err) / v_dl, cfg.detect_threshold);
    const bool flag_bs = detect_pollution(static_cast<double>(val_ul_err) / v_ul, cfg.detect_threshold);
    m.pollution_detected = flag_ue || flag_bs;
    if (m.pollution_detected) m.backoff_slots = backoff_and_restart(rng, cfg.max_backoff);
    return m;
}

Estimate proportion(long long k, long long n) {
    if (n <= 0) return {std::nan(""), std::nan("")};
    const double p = static_cast<double>(k) / static_cast<double>(n);
    return {p, 1.959963984540054 * std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
};

template <typename F>
MeanSd mean_sd(const std::vector<TrialMetrics>& t, F field) {
    MeanSd r;
    if (t.empty()) return r;
    double sum = 0.0;
    for (const auto& m : t) sum += field(m);
    r.mean = sum / static_cast<double>(t.size());
    double ss = 0.0;
    for (const auto& m : t) {
        const double d = field(m) - r.mean;
        ss += d * d;
    }
    r.sd = t.size() > 1 ? std::sqrt(ss / static_cast<double>(t.size() - 1)) : 0.0;
    return r;
}

Estimate mean_estimate(const MeanSd& ms, std::size_t n) {
    return {ms.mean, n ? 1.959963984540054 * ms.sd / std::sqrt(static_cast<double>(n)) : 0.0};
}

double pilot_efficiency(int pilots, int n_total) {
    return slot_efficiency(std::min(pilots, n_total), n_total).value();
}

}  // namespace

TrialMetrics run_trial(const ScenarioConfig& cfg, std::uint64_t trial_index) {
    return run_trial(cfg, trial_index, nullptr);
}

TrialMetrics run_trial(const ScenarioConfig& cfg, std::uint64_t trial_index, std::vector<CepTraceEntry>* trace) {
    try {
        return simulate(cfg, trial_index, trace);
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception& e) {
        throw std::runtime_error("trial " + std::to_string(trial_index) + ": " + e.what());
    }
}

SweepAxis parse_sweep_axis(const std::string& name) {
    if (name == "m_a") return SweepAxis::m_a;
    if (name == "m_e") return SweepAxis::m_e;
    if (name == "eta_s") return SweepAxis::eta_s;
    if (name == "tx_power_dbm") return SweepAxis::tx_power_dbm;
    if (name == "n_n_prime") return SweepAxis::n_n_prime;
    throw ValidationError("sweep", "unknown axis '" + name + "' (m_a|m_e|eta_s|tx_power_dbm|n_n_prime)");
}

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::m_a: return "m_a";
        case SweepAxis::m_e: return "m_e";
        case SweepAxis::eta_s: return "eta_s";
        case SweepAxis::tx_power_dbm: return "tx_power_dbm";
        case SweepAxis::n_n_prime: return "n_n_prime";
    }
    return "?";
}

SweepPoint apply_axis(const ScenarioConfig& base, SweepAxis axis, double value) {
    SweepPoint p{base, {static_cast<double>(base.adversary.n_r), static_cast<double>(base.adversary.n_n),
                        static_cast<double>(base.adversary.n_n_prime)}};
    auto as_count = [&](const char* field) {
        if (!(value >= 1.0) || value != std::floor(value) || value > 1e9) {
            throw ValidationError(field, "sweep value must be a positive integer");
        }
        return static_cast<int>(value);
    };
    switch (axis) {
        case SweepAxis::m_a:
            p.cfg.m_a = as_count("m_a");
            break;
        case SweepAxis::m_e:
            p.cfg.m_e = as_count("m_e");
            break;
        case SweepAxis::tx_power_dbm:
            if (!std::isfinite(value)) throw ValidationError("tx_power_dbm", "must be finite");
            p.cfg.p_max_dbm = value;
            p.cfg.budget.tx_power = db_to_linear(value);
            break;
        case SweepAxis::eta_s: {
            if (!(value >= 0.0 && value <= 1.0)) throw ValidationError("eta_s", "must lie in [0, 1]");
            const double n = base.slot.n_total;
            const double ratio = base.adversary.n_n > 0
                                     ? static_cast<double>(base.adversary.n_n_prime) / base.adversary.n_n
                                     : 1.0;
            p.timers.n_r = (1.0 - value) * n;
            p.timers.n_n = 2.0 * p.timers.n_r;
            p.timers.n_n_prime = p.timers.n_n * ratio;
            p.cfg.adversary.n_r = static_cast<int>(std::lround(p.timers.n_r));
            p.cfg.adversary.n_n = static_cast<int>(std::lround(p.timers.n_n));
            p.cfg.adversary.n_n_prime =
                std::max(p.cfg.adversary.n_n, static_cast<int>(std::lround(p.timers.n_n_prime)));
            break;
        }
        case SweepAxis::n_n_prime: {
            if (!(value >= 0.0) || !std::isfinite(value)) {
                throw ValidationError("n_n_prime", "must be non-negative");
            }
            p.timers.n_n_prime = value;
            p.cfg.adversary.n_n_prime = static_cast<int>(std::lround(value));
            break;
        }
    }
    p.cfg.validate();
    return p;
}

SweepRow closed_form_row(const ScenarioConfig& base, SweepAxis axis, double value) {
    const SweepPoint pt = apply_axis(base, axis, value);
    const ScenarioConfig& cfg = pt.cfg;
    const LinkBudget budget = derive_link_budget(cfg);
    const int n = cfg.slot.n_total;
    const SnrSet snr = snr_closed_form(budget, cfg.m_a, cfg.m_e);

    SweepRow r;
    r.axis = to_string(axis);
    r.value = value;
    r.seed = cfg.seed;
    r.timers = pt.timers;
    r.eta_d = pilot_efficiency(kDirectPilots, n);
    r.eta_n = pilot_efficiency(std::max(cfg.slot.pilot_count(Direction::dl), cfg.slot.pilot_count(Direction::ul)), n);
    r.eta_r = pilot_efficiency(kReciprocalPilots, n);
    r.rho_d = snr.rho_d;
    r.rho_a = snr.rho_a;
    r.rho_e = snr.rho_e(cfg.eve_link);
    r.c_d = achievable_rate({r.eta_d, r.rho_d});
    r.c_a = achievable_rate({r.eta_n, r.rho_a});
    r.c_ar = achievable_rate({r.eta_r, r.rho_a});
    r.c_e = achievable_rate({r.eta_n, r.rho_e});
    r.c_er = achievable_rate({r.eta_r, r.rho_e});
    r.e_ar = asr_timed(r.c_ar, r.c_er, pt.timers.n_r, n);
    r.e_an = asr_timed(r.c_a, r.c_e, pt.timers.n_n, n);
    const AsrApprox approx = asr_approx({budget, cfg.m_a, cfg.m_e, r.eta_n, pt.timers.n_n, n, cfg.eve_link});
    r.e_an_printed = approx.printed;
    r.e_an_consistent = approx.consistent;
    const FakeProb fp =
        fake_prob({budget, cfg.m_a, cfg.m_e, cfg.eve_link, n, pt.timers.n_n_prime, cfg.literal_reciprocal_fake});
    r.beta = fp.beta;
    r.p2 = fp.p2;
    r.p_r = fp.p_r;
    r.p_r_reciprocal = fp.p_r_reciprocal;
    return r;
}

std::vector<SweepRow> analyze_sweep(const ScenarioConfig& base, SweepAxis axis,
                                    const std::vector<double>& values) {
    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    for (double v : values) rows.push_back(closed_form_row(base, axis, v));
    return rows;
}

std::vector<TrialMetrics> run_trials(const ScenarioConfig& cfg, int trials, int workers) {
    if (trials < 0) throw ValidationError("trials", "must be non-negative");
    if (workers < 1) throw ValidationError("workers", "must be at least 1");
    std::vector<TrialMetrics> out(static_cast<std::size_t>(trials));
    const int w = std::min(workers, std::max(trials, 1));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
    auto work = [&](int id) {
        try {
            for (int t = id; t < trials; t += w) {
                out[static_cast<std::size_t>(t)] = run_trial(cfg, static_cast<std::uint64_t>(t));
            }
        } catch (...) {
            errors[static_cast<std::size_t>(id)] = std::current_exception();
        }
    };
    if (w == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(w));
        for (int id = 0; id < w; ++id) pool.emplace_back(work, id);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& base, SweepAxis axis, const std::vector<double>& values,
                                int trials, int workers) {
    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    for (double v : values) {
        SweepRow r = closed_form_row(base, axis, v);
        const ScenarioConfig cfg = apply_axis(base, axis, v).cfg;
        const std::vector<TrialMetrics> t = run_trials(cfg, trials, workers);
        r.trials = trials;
        r.has_empirical = true;

        long long p2 = 0, dl = 0, dl_err = 0, ul = 0, ul_err = 0, edl = 0, edl_err = 0, eul = 0, eul_err = 0,
                  fi = 0, fd = 0, det = 0;
        for (const auto& m : t) {
            p2 += m.p2_event;
            dl += m.dl_symbols;
            dl_err += m.dl_errors;
            ul += m.ul_symbols;
            ul_err += m.ul_errors;
            edl += m.eve_dl_symbols;
            edl_err += m.eve_dl_errors;
            eul += m.eve_ul_symbols;
            eul_err += m.eve_ul_errors;
            fi += m.fake_injected();
            fd += m.fake_decoded();
            det += m.pollution_detected;
        }
        const auto n = static_cast<long long>(t.size());
        r.p2_hat = proportion(p2, n);
        r.ser_dl = proportion(dl_err, dl);
        r.ser_ul = proportion(ul_err, ul);
        r.eve_ser_dl = proportion(edl_err, edl);
        r.eve_ser_ul = proportion(eul_err, eul);
        r.fake_rate = proportion(fd, fi);
        r.detect_rate = proportion(det, n);
        const bool bs_link = cfg.eve_link == EveLink::bs;
        r.snr_d_hat = mean_estimate(mean_sd(t, [](const TrialMetrics& m) { return m.snr_d; }), t.size());
        r.snr_a_hat = mean_estimate(mean_sd(t, [](const TrialMetrics& m) { return m.snr_a; }), t.size());
        r.snr_e_hat = mean_estimate(
            mean_sd(t, [bs_link](const TrialMetrics& m) { return bs_link ? m.snr_eb : m.snr_eu; }), t.size());
        rows.push_back(r);
    }
    return rows;
}

bool ValidationReport::any_flagged() const {
    return std::any_of(entries.begin(), entries.end(), [](const ValidationEntry& e) { return e.flagged; });
}

ValidationReport cross_validate(const std::vector<SweepRow>& rows) {
    ValidationReport rep;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SweepRow& r = rows[i];
        if (!r.has_empirical) {
            throw std::invalid_argument("cross_validate: row " + std::to_string(i) + " has no empirical columns");
        }
        if (r.trials <= 0) throw std::invalid_argument("cross_validate: row " + std::to_string(i) + " has zero trials");
        const double n = r.trials;

        ValidationEntry p2{i, "p2", r.p2_hat.value, r.p2, 0.0, false};
        const double se = std::sqrt(r.p2 * (1.0 - r.p2) / n);
        if (se > 0.0) {
            p2.z = (p2.empirical - p2.closed_form) / se;
        } else {
            p2.z = p2.empirical == p2.closed_form ? 0.0 : std::copysign(INFINITY, p2.empirical - p2.closed_form);
        }
        rep.entries.push_back(p2);

        auto mean_entry = [&](const char* name, const Estimate& e, double closed) {
            ValidationEntry v{i, name, e.value, closed, 0.0, false};
            const double sem = e.radius / 1.959963984540054;
            if (sem > 0.0) {
                v.z = (e.value - closed) / sem;
            } else {
                v.z = e.value == closed ? 0.0 : INFINITY;
            }
            rep.entries.push_back(v);
        };
        mean_entry("snr_d", r.snr_d_hat, r.rho_d);
        mean_entry("snr_a", r.snr_a_hat, r.rho_a);
        mean_entry("snr_e", r.snr_e_hat, r.rho_e);
    }
    for (auto& e : rep.entries) e.flagged = !(std::abs(e.z) <= 3.0);
    return rep;
}

ScenarioConfig cep_demo_config(const ScenarioConfig& base, ScenarioTag tag) {
    ScenarioConfig cfg = base;
    const SlotPlan& slot = cfg.slot;
    const int first_p1 = std::min({slot.dl_p1.front(), slot.dl_p2.front(), slot.ul_p1.front()});
    const auto pilots = slot.pilot_indices();
    cfg.dris_active_from = std::min(cfg.dris_active_from, first_p1);
    switch (tag) {
        case ScenarioTag::opt1:
            cfg.adversary.mode = AdversaryMode::eavesdrop;
            cfg.adversary.activation_symbol = pilots.back() + 1;
            break;
        case ScenarioTag::opt2:
            cfg.adversary.mode = AdversaryMode::eavesdrop;
            cfg.adversary.activation_symbol = 0;
            break;
        case ScenarioTag::polluted:
            cfg.adversary.mode = AdversaryMode::pollute_cep;
            break;
        case ScenarioTag::undetermined:
            throw ValidationError("scenario", "choose opt1, opt2 or polluted");
    }
    cfg.validate();
    return cfg;
}

}  // namespace dris
