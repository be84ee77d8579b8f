// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dris/cep.hpp"
#include "dris/scenario.hpp"

namespace dris {

/// Outcome of one simulated slot. Rates are kept as integer counts so
/// aggregation over trials is exact and order-free.
struct TrialMetrics {
    // instantaneous link SNRs |h|^2 / noise
    double snr_d = 0.0;
    double snr_a = 0.0;
    double snr_eu = 0.0;
    double snr_eb = 0.0;
    bool p2_event = false;  // |h_e|^2 > beta on the configured Eve link

    int dl_symbols = 0;
    int dl_errors = 0;
    int ul_symbols = 0;
    int ul_errors = 0;
    int eve_dl_symbols = 0;
    int eve_dl_errors = 0;
    int eve_ul_symbols = 0;
    int eve_ul_errors = 0;
    int fake_dl_injected = 0;
    int fake_dl_decoded = 0;
    int fake_ul_injected = 0;
    int fake_ul_decoded = 0;
    int validation_symbols = 0;
    int validation_errors = 0;
    bool pollution_detected = false;
    int backoff_slots = 0;
    ScenarioTag tag = ScenarioTag::undetermined;

    int fake_injected() const { return fake_dl_injected + fake_ul_injected; }
    int fake_decoded() const { return fake_dl_decoded + fake_ul_decoded; }

    bool operator==(const TrialMetrics&) const = default;
};

/// One CEP observation or recovered quantity, for walkthrough output.
struct CepTraceEntry {
    std::string kind;   // "pilot", "recovered" or "truth"
    std::string side;   // "ue" or "bs"
    std::string label;  // stage or quantity name
    int symbol = -1;
    bool dris_on = false;
    bool eve_on = false;
    Complex value;
    Complex truth;
};

/// Simulates one full slot; deterministic in (cfg.seed, trial_index).
TrialMetrics run_trial(const ScenarioConfig& cfg, std::uint64_t trial_index);
TrialMetrics run_trial(const ScenarioConfig& cfg, std::uint64_t trial_index,
                       std::vector<CepTraceEntry>* trace);

enum class SweepAxis { m_a, m_e, eta_s, tx_power_dbm, n_n_prime };

SweepAxis parse_sweep_axis(const std::string& name);
std::string to_string(SweepAxis axis);

/// Discovery timers for one sweep point. Closed forms use the real values,
/// simulation uses them rounded to whole symbols.
struct SweepTimers {
    double n_r = 0.0;
    double n_n = 0.0;
    double n_n_prime = 0.0;
};

struct SweepPoint {
    ScenarioConfig cfg;
    SweepTimers timers;
};

SweepPoint apply_axis(const ScenarioConfig& base, SweepAxis axis, double value);

struct Estimate {
    double value = 0.0;
    double radius = 0.0;  // 95% confidence half-width
};

struct SweepRow {
    std::string axis;
    double value = 0.0;
    std::uint64_t seed = 0;
    int trials = 0;
    SweepTimers timers;

    double eta_d = 0.0;
    double eta_n = 0.0;
    double eta_r = 0.0;
    double rho_d = 0.0;
    double rho_a = 0.0;
    double rho_e = 0.0;
    double c_d = 0.0;
    double c_a = 0.0;   // non-reciprocal efficiency
    double c_ar = 0.0;  // reciprocal efficiency
    double c_e = 0.0;
    double c_er = 0.0;
    double e_ar = 0.0;
    double e_an = 0.0;
    double e_an_printed = 0.0;
    double e_an_consistent = 0.0;
    double beta = 0.0;
    double p2 = 0.0;
    double p_r = 0.0;
    double p_r_reciprocal = 0.0;

    bool has_empirical = false;
    Estimate p2_hat;
    Estimate snr_d_hat;
    Estimate snr_a_hat;
    Estimate snr_e_hat;
    Estimate ser_dl;
    Estimate ser_ul;
    Estimate eve_ser_dl;
    Estimate eve_ser_ul;
    Estimate fake_rate;
    Estimate detect_rate;
};

/// Closed-form columns only.
SweepRow closed_form_row(const ScenarioConfig& base, SweepAxis axis, double value);

/// Monte Carlo plus closed forms. `workers` never changes the result.
std::vector<SweepRow> run_sweep(const ScenarioConfig& base, SweepAxis axis, const std::vector<double>& values,
                                int trials, int workers);
std::vector<SweepRow> analyze_sweep(const ScenarioConfig& base, SweepAxis axis,
                                    const std::vector<double>& values);

/// Runs trials [0, trials) of cfg on `workers` threads, results in index order.
std::vector<TrialMetrics> run_trials(const ScenarioConfig& cfg, int trials, int workers);

struct ValidationEntry {
    std::size_t row = 0;
    std::string metric;
    double empirical = 0.0;
    double closed_form = 0.0;
    double z = 0.0;
    bool flagged = false;
};

struct ValidationReport {
    std::vector<ValidationEntry> entries;
    bool any_flagged() const;
};

/// z-scores of the empirical P_2 and mean SNRs against their closed forms.
ValidationReport cross_validate(const std::vector<SweepRow>& rows);

/// Applies the activation timing of one CEP walkthrough scenario.
ScenarioConfig cep_demo_config(const ScenarioConfig& base, ScenarioTag tag);

}  // namespace dris
