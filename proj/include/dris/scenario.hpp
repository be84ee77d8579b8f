// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dris/common.hpp"

namespace dris {

struct Position {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool operator==(const Position&) const = default;
};

double distance(const Position& a, const Position& b);

/// Linear power gains and noise of every link. SNRs are referenced to the
/// transmit power, i.e. rho = sigma^2 * tx_power / sigma_w2.
struct LinkBudget {
    double sigma_d2 = 1.0;
    double sigma_qa2 = 1.0;
    double sigma_ga2 = 1.0;
    double sigma_qe2 = 1.0;
    double sigma_ge2 = 1.0;
    double sigma_gv2 = 1.0;
    double sigma_w2 = 1.0;
    double tx_power = 1.0;

    /// Receiver noise variance for unit-power transmitted symbols.
    double noise_var() const { return sigma_w2 / tx_power; }
    void validate() const;

    bool operator==(const LinkBudget&) const = default;
};

/// Explicit overrides of derived link-budget entries. Any value present here
/// wins over the geometry-derived one.
struct BudgetOverrides {
    std::optional<double> sigma_d2;
    std::optional<double> sigma_qa2;
    std::optional<double> sigma_ga2;
    std::optional<double> sigma_qe2;
    std::optional<double> sigma_ge2;
    std::optional<double> sigma_gv2;
    std::optional<double> sigma_w2;
    std::optional<double> tx_power;

    static BudgetOverrides all_of(const LinkBudget& budget);
    bool operator==(const BudgetOverrides&) const = default;
};

enum class SymbolRole { dl_data, dl_p0, dl_p1, dl_p2, ul_data, ul_p0, ul_p1 };

/// Partition of the N symbols of one TDD slot into data and pilot stages.
struct SlotPlan {
    int n_total = 0;
    std::vector<int> dl_data;
    std::vector<int> dl_p0;
    std::vector<int> dl_p1;
    std::vector<int> dl_p2;
    std::vector<int> ul_data;
    std::vector<int> ul_p0;
    std::vector<int> ul_p1;
    int k_subcarriers = 600;

    /// Throws ValidationError unless the subsets partition {0..N-1}.
    void validate() const;
    /// Role of symbol n; throws std::out_of_range if n is not in the slot.
    SymbolRole role(int n) const;
    bool is_dl(int n) const;
    bool is_pilot(int n) const;
    /// Pilot symbols grouped by the dynamic phase they are sent under: the
    /// flipped DL p2 symbols count toward UL, giving 2 and 3 for the default plan.
    int pilot_count(Direction phase_direction) const;
    std::vector<int> pilot_indices() const;

    bool operator==(const SlotPlan&) const = default;
};

/// Pilots first (DL p0 p1 p2, UL p0 p1), followed by DL data and then UL data.
SlotPlan default_slot_plan(int n_total);

/// Exact efficiency 1 - n_pilots/n_total as an unreduced fraction.
struct Fraction {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Fraction&) const = default;
};
Fraction slot_efficiency(int n_pilots, int n_total);

inline constexpr int kDirectPilots = 2;
inline constexpr int kReciprocalPilots = 4;
inline constexpr int kNonReciprocalPilots = 3;

enum class AdversaryMode { off, eavesdrop, inject, pollute_cep };

struct AdversaryTiming {
    int n_r = 11;
    int n_n = 22;
    int n_n_prime = 22;
    int activation_symbol = 0;
    AdversaryMode mode = AdversaryMode::off;

    void validate() const;
    bool operator==(const AdversaryTiming&) const = default;
};

enum class TimingRegime { reciprocal, nonreciprocal_eavesdrop, nonreciprocal_inject };

struct ExposureFraction {
    double value = 0.0;
    bool clamped = false;
};

/// Fraction of the slot during which Eve holds the current precoders/combiners.
ExposureFraction eta_s(const AdversaryTiming& timing, int n_total, TimingRegime regime);
/// Same as eta_s for a single timer, validated as an integer symbol count.
ExposureFraction eta_s_for_timer(double timer, int n_total);

enum class GainMode { incoherent, coherent };
enum class Constellation { qpsk, qam16 };
enum class Scheme { nonreciprocal, reciprocal };
enum class EveLink { ue, bs };

struct ScenarioConfig {
    Position bs{0.0, 0.0, 0.0};
    Position ue{20.0, 0.0, 0.0};
    Position dris{10.0, 5.0, 0.0};
    Position aris{10.0, -5.0, 0.0};
    Position eve{10.0, -10.0, 0.0};
    double carrier_ghz = 3.5;
    double p_max_dbm = -30.0;
    /// Thermal noise in one 30 kHz subcarrier.
    double noise_dbm = -174.0 + 44.771212547196626;
    int m_a = 2000;
    int m_e = 1000;
    BudgetOverrides budget;
    SlotPlan slot = default_slot_plan(22);
    AdversaryTiming adversary;
    int dris_active_from = 1;
    std::optional<double> phi_dl;
    std::optional<double> phi_ul;
    GainMode gain_mode = GainMode::incoherent;
    Constellation constellation = Constellation::qpsk;
    Scheme scheme = Scheme::nonreciprocal;
    EveLink eve_link = EveLink::ue;
    std::uint64_t seed = 1;
    int trials = 10000;
    bool noiseless = false;
    /// Legitimate precoders use the true D-RIS cascades instead of CEP output.
    bool perfect_csi = false;
    int validation_symbols = 4;
    double detect_threshold = 0.1;
    int max_backoff = 10;
    bool literal_reciprocal_fake = false;

    void validate() const;
    bool operator==(const ScenarioConfig&) const = default;
};

/// Parses `section.key = value` text; missing keys keep their defaults.
ScenarioConfig load_scenario(std::string_view source);
ScenarioConfig load_scenario_file(const std::string& path);
std::string serialize_scenario(const ScenarioConfig& cfg);

std::string to_string(AdversaryMode mode);
std::string to_string(GainMode mode);
std::string to_string(Constellation c);
std::string to_string(Scheme s);

}  // namespace dris
