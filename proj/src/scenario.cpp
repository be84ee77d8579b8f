// SPDX-License-Identifier: Apache-2.0
#include "dris/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace dris {

double distance(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

namespace {

void require_positive(const char* field, double value) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw ValidationError(field, "must be strictly positive and finite");
    }
}

}  // namespace

void LinkBudget::validate() const {
    require_positive("budget.sigma_d2", sigma_d2);
    require_positive("budget.sigma_qa2", sigma_qa2);
    require_positive("budget.sigma_ga2", sigma_ga2);
    require_positive("budget.sigma_qe2", sigma_qe2);
    require_positive("budget.sigma_ge2", sigma_ge2);
    require_positive("budget.sigma_gv2", sigma_gv2);
    require_positive("budget.sigma_w2", sigma_w2);
    require_positive("budget.tx_power", tx_power);
}

BudgetOverrides BudgetOverrides::all_of(const LinkBudget& b) {
    BudgetOverrides o;
    o.sigma_d2 = b.sigma_d2;
    o.sigma_qa2 = b.sigma_qa2;
    o.sigma_ga2 = b.sigma_ga2;
    o.sigma_qe2 = b.sigma_qe2;
    o.sigma_ge2 = b.sigma_ge2;
    o.sigma_gv2 = b.sigma_gv2;
    o.sigma_w2 = b.sigma_w2;
    o.tx_power = b.tx_power;
    return o;
}

// ---------------------------------------------------------------------------
// slot plan

void SlotPlan::validate() const {
    if (n_total < 1) {
        throw ValidationError("slot.n_total", "must be at least 1");
    }
    std::vector<int> owner(static_cast<std::size_t>(n_total), -1);
    const std::vector<int>* subsets[] = {&dl_data, &dl_p0, &dl_p1, &dl_p2,
                                         &ul_data, &ul_p0, &ul_p1};
    static constexpr const char* names[] = {"slot.dl_data", "slot.dl_p0", "slot.dl_p1",
                                            "slot.dl_p2",   "slot.ul_data", "slot.ul_p0",
                                            "slot.ul_p1"};
    for (int s = 0; s < 7; ++s) {
        for (int n : *subsets[s]) {
            if (n < 0 || n >= n_total) {
                throw ValidationError(names[s], "index " + std::to_string(n) + " outside slot");
            }
            if (owner[static_cast<std::size_t>(n)] != -1) {
                throw ValidationError(names[s], "index " + std::to_string(n) +
                                                    " already assigned to " +
                                                    names[owner[static_cast<std::size_t>(n)]]);
            }
            owner[static_cast<std::size_t>(n)] = s;
        }
    }
    for (int n = 0; n < n_total; ++n) {
        if (owner[static_cast<std::size_t>(n)] == -1) {
            throw ValidationError("slot", "symbol " + std::to_string(n) + " not assigned");
        }
    }
    if (dl_p0.empty() || dl_p1.empty() || dl_p2.empty() || ul_p0.empty() || ul_p1.empty()) {
        throw ValidationError("slot", "every pilot stage needs at least one symbol");
    }
    if (k_subcarriers < 1) {
        throw ValidationError("slot.k_subcarriers", "must be at least 1");
    }
}

SymbolRole SlotPlan::role(int n) const {
    auto contains = [n](const std::vector<int>& v) {
        return std::find(v.begin(), v.end(), n) != v.end();
    };
    if (contains(dl_data)) return SymbolRole::dl_data;
    if (contains(dl_p0)) return SymbolRole::dl_p0;
    if (contains(dl_p1)) return SymbolRole::dl_p1;
    if (contains(dl_p2)) return SymbolRole::dl_p2;
    if (contains(ul_data)) return SymbolRole::ul_data;
    if (contains(ul_p0)) return SymbolRole::ul_p0;
    if (contains(ul_p1)) return SymbolRole::ul_p1;
    throw std::out_of_range("symbol " + std::to_string(n) + " is not part of the slot");
}

bool SlotPlan::is_dl(int n) const {
    switch (role(n)) {
        case SymbolRole::dl_data:
        case SymbolRole::dl_p0:
        case SymbolRole::dl_p1:
        case SymbolRole::dl_p2:
            return true;
        default:
            return false;
    }
}

bool SlotPlan::is_pilot(int n) const {
    const SymbolRole r = role(n);
    return r != SymbolRole::dl_data && r != SymbolRole::ul_data;
}

int SlotPlan::pilot_count(Direction phase_direction) const {
    if (phase_direction == Direction::dl) {
        return static_cast<int>(dl_p0.size() + dl_p1.size());
    }
    return static_cast<int>(ul_p0.size() + ul_p1.size() + dl_p2.size());
}

std::vector<int> SlotPlan::pilot_indices() const {
    std::vector<int> out;
    for (const auto* v : {&dl_p0, &dl_p1, &dl_p2, &ul_p0, &ul_p1}) {
        out.insert(out.end(), v->begin(), v->end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

SlotPlan default_slot_plan(int n_total) {
    if (n_total < 6) {
        throw ValidationError("slot.n_total",
                              "needs at least 6 symbols (5 pilots and one data symbol)");
    }
    SlotPlan plan;
    plan.n_total = n_total;
    plan.dl_p0 = {0};
    plan.dl_p1 = {1};
    plan.dl_p2 = {2};
    plan.ul_p0 = {3};
    plan.ul_p1 = {4};
    const int data = n_total - 5;
    const int dl_data = (data + 1) / 2;
    int n = 5;
    for (int i = 0; i < dl_data; ++i) plan.dl_data.push_back(n++);
    while (n < n_total) plan.ul_data.push_back(n++);
    return plan;
}

Fraction slot_efficiency(int n_pilots, int n_total) {
    if (n_total <= 0 || n_pilots < 0 || n_pilots > n_total) {
        throw ValidationError("n_pilots", "requires 0 <= n_pilots <= n_total, n_total > 0");
    }
    return {n_total - n_pilots, n_total};
}

// ---------------------------------------------------------------------------
// adversary timing

void AdversaryTiming::validate() const {
    if (n_r < 0) throw ValidationError("adv.n_r", "must be non-negative");
    if (n_n < 0) throw ValidationError("adv.n_n", "must be non-negative");
    if (n_n_prime < n_n) throw ValidationError("adv.n_n_prime", "must be >= adv.n_n");
    if (activation_symbol < 0) {
        throw ValidationError("adv.activation_symbol", "must be non-negative");
    }
}

ExposureFraction eta_s_for_timer(double timer, int n_total) {
    if (n_total <= 0) throw ValidationError("n_total", "must be positive");
    if (!std::isfinite(timer) || timer < 0.0 || timer != std::floor(timer)) {
        throw ValidationError("timer", "timers are non-negative integer symbol counts");
    }
    if (timer > n_total) {
        return {0.0, true};
    }
    return {1.0 - timer / static_cast<double>(n_total), false};
}

ExposureFraction eta_s(const AdversaryTiming& timing, int n_total, TimingRegime regime) {
    switch (regime) {
        case TimingRegime::reciprocal:
            return eta_s_for_timer(timing.n_r, n_total);
        case TimingRegime::nonreciprocal_eavesdrop:
            return eta_s_for_timer(timing.n_n, n_total);
        case TimingRegime::nonreciprocal_inject:
            return eta_s_for_timer(timing.n_n_prime, n_total);
    }
    return {};
}

// ---------------------------------------------------------------------------
// configuration

void ScenarioConfig::validate() const {
    if (m_a < 1) throw ValidationError("ris.m_a", "must be at least 1");
    if (m_e < 1) throw ValidationError("ris.m_e", "must be at least 1");
    if (!(carrier_ghz > 0.0) || !std::isfinite(carrier_ghz)) {
        throw ValidationError("geom.carrier_ghz", "must be positive");
    }
    for (const auto& [name, p] : {std::pair{"geom.bs", bs}, std::pair{"geom.ue", ue},
                                  std::pair{"geom.dris", dris}, std::pair{"geom.aris", aris},
                                  std::pair{"geom.eve", eve}}) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
            throw ValidationError(name, "coordinates must be finite");
        }
    }
    for (const auto& [name, v] :
         {std::pair{"budget.sigma_d2", budget.sigma_d2}, std::pair{"budget.sigma_qa2", budget.sigma_qa2},
          std::pair{"budget.sigma_ga2", budget.sigma_ga2}, std::pair{"budget.sigma_qe2", budget.sigma_qe2},
          std::pair{"budget.sigma_ge2", budget.sigma_ge2}, std::pair{"budget.sigma_gv2", budget.sigma_gv2},
          std::pair{"budget.sigma_w2", budget.sigma_w2}, std::pair{"budget.tx_power", budget.tx_power}}) {
        if (v && (!std::isfinite(*v) || *v <= 0.0)) {
            throw ValidationError(name, "must be strictly positive and finite");
        }
    }
    slot.validate();
    adversary.validate();
    const auto first_ha_pilot = std::min({slot.dl_p1.front(), slot.dl_p2.front(), slot.ul_p1.front()});
    if (dris_active_from < 0 || dris_active_from > first_ha_pilot) {
        throw ValidationError("ris.dris_active_from",
                              "D-RIS must be active before its first pilot stage");
    }
    if (trials < 0) throw ValidationError("run.trials", "must be non-negative");
    if (validation_symbols < 1 ||
        validation_symbols > static_cast<int>(std::min(slot.dl_data.size(), slot.ul_data.size()))) {
        throw ValidationError("run.validation_symbols",
                              "must be between 1 and the data symbols per direction");
    }
    if (!(detect_threshold >= 0.0 && detect_threshold <= 1.0)) {
        throw ValidationError("run.detect_threshold", "must lie in [0, 1]");
    }
    if (max_backoff < 1) throw ValidationError("cep.max_backoff", "must be at least 1");
}

std::string to_string(AdversaryMode mode) {
    switch (mode) {
        case AdversaryMode::off: return "off";
        case AdversaryMode::eavesdrop: return "eavesdrop";
        case AdversaryMode::inject: return "inject";
        case AdversaryMode::pollute_cep: return "pollute_cep";
    }
    return "?";
}

std::string to_string(GainMode mode) {
    return mode == GainMode::coherent ? "coherent" : "incoherent";
}

std::string to_string(Constellation c) { return c == Constellation::qam16 ? "qam16" : "qpsk"; }

std::string to_string(Scheme s) {
    return s == Scheme::reciprocal ? "reciprocal" : "nonreciprocal";
}

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) out.push_back(trim(item));
    return out;
}

double parse_double(int line, const std::string& key, const std::string& text) {
    double v = 0.0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw ParseError(line, key + ": expected a number, got '" + text + "'");
    }
    return v;
}

long long parse_integer(int line, const std::string& key, const std::string& text) {
    long long v = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw ParseError(line, key + ": expected an integer, got '" + text + "'");
    }
    return v;
}

int parse_int(int line, const std::string& key, const std::string& text) {
    const long long v = parse_integer(line, key, text);
    if (v < INT32_MIN || v > INT32_MAX) throw ParseError(line, key + ": integer out of range");
    return static_cast<int>(v);
}

bool parse_bool(int line, const std::string& key, const std::string& text) {
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    throw ParseError(line, key + ": expected true/false, got '" + text + "'");
}

Position parse_position(int line, const std::string& key, const std::string& text) {
    const auto parts = split_commas(text);
    if (parts.size() != 2 && parts.size() != 3) {
        throw ParseError(line, key + ": expected x,y[,z]");
    }
    Position p;
    p.x = parse_double(line, key, parts[0]);
    p.y = parse_double(line, key, parts[1]);
    if (parts.size() == 3) p.z = parse_double(line, key, parts[2]);
    return p;
}

std::vector<int> parse_index_list(int line, const std::string& key, const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    for (const auto& part : split_commas(text)) out.push_back(parse_int(line, key, part));
    return out;
}

template <typename Enum>
Enum parse_enum(int line, const std::string& key, const std::string& text,
                std::initializer_list<std::pair<const char*, Enum>> options) {
    for (const auto& [name, value] : options) {
        if (text == name) return value;
    }
    std::string allowed;
    for (const auto& [name, value] : options) {
        allowed += allowed.empty() ? name : std::string("|") + name;
    }
    throw ParseError(line, key + ": expected one of " + allowed + ", got '" + text + "'");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_position(const Position& p) {
    return format_double(p.x) + "," + format_double(p.y) + "," + format_double(p.z);
}

std::string format_list(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

ScenarioConfig load_scenario(std::string_view source) {
    ScenarioConfig cfg;
    std::map<std::string, std::pair<int, std::string>> entries;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= source.size()) {
        const auto nl = source.find('\n', pos);
        std::string_view raw = source.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? source.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected 'key = value'");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty()) throw ParseError(line_no, "empty key");
        if (entries.count(key)) throw ParseError(line_no, "duplicate key '" + key + "'");
        entries[key] = {line_no, value};
    }

    // n_total must be applied before explicit subsets so they can override
    // the default layout for the new length.
    if (auto it = entries.find("slot.n_total"); it != entries.end()) {
        const int n = parse_int(it->second.first, it->first, it->second.second);
        try {
            cfg.slot = default_slot_plan(n);
        } catch (const ValidationError&) {
            cfg.slot = SlotPlan{};
            cfg.slot.n_total = n;
        }
        entries.erase(it);
    }

    using Setter = std::function<void(int, const std::string&, const std::string&)>;
    const std::map<std::string, Setter> setters = {
        {"geom.bs", [&](int l, auto& k, auto& v) { cfg.bs = parse_position(l, k, v); }},
        {"geom.ue", [&](int l, auto& k, auto& v) { cfg.ue = parse_position(l, k, v); }},
        {"geom.dris", [&](int l, auto& k, auto& v) { cfg.dris = parse_position(l, k, v); }},
        {"geom.aris", [&](int l, auto& k, auto& v) { cfg.aris = parse_position(l, k, v); }},
        {"geom.eve", [&](int l, auto& k, auto& v) { cfg.eve = parse_position(l, k, v); }},
        {"geom.carrier_ghz", [&](int l, auto& k, auto& v) { cfg.carrier_ghz = parse_double(l, k, v); }},
        {"ris.m_a", [&](int l, auto& k, auto& v) { cfg.m_a = parse_int(l, k, v); }},
        {"ris.m_e", [&](int l, auto& k, auto& v) { cfg.m_e = parse_int(l, k, v); }},
        {"ris.dris_active_from", [&](int l, auto& k, auto& v) { cfg.dris_active_from = parse_int(l, k, v); }},
        {"ris.phi_dl", [&](int l, auto& k, auto& v) { cfg.phi_dl = parse_double(l, k, v); }},
        {"ris.phi_ul", [&](int l, auto& k, auto& v) { cfg.phi_ul = parse_double(l, k, v); }},
        {"budget.p_max_dbm", [&](int l, auto& k, auto& v) { cfg.p_max_dbm = parse_double(l, k, v); }},
        {"budget.noise_dbm", [&](int l, auto& k, auto& v) { cfg.noise_dbm = parse_double(l, k, v); }},
        {"budget.sigma_d2", [&](int l, auto& k, auto& v) { cfg.budget.sigma_d2 = parse_double(l, k, v); }},
        {"budget.sigma_qa2", [&](int l, auto& k, auto& v) { cfg.budget.sigma_qa2 = parse_double(l, k, v); }},
        {"budget.sigma_ga2", [&](int l, auto& k, auto& v) { cfg.budget.sigma_ga2 = parse_double(l, k, v); }},
        {"budget.sigma_qe2", [&](int l, auto& k, auto& v) { cfg.budget.sigma_qe2 = parse_double(l, k, v); }},
        {"budget.sigma_ge2", [&](int l, auto& k, auto& v) { cfg.budget.sigma_ge2 = parse_double(l, k, v); }},
        {"budget.sigma_gv2", [&](int l, auto& k, auto& v) { cfg.budget.sigma_gv2 = parse_double(l, k, v); }},
        {"budget.sigma_w2", [&](int l, auto& k, auto& v) { cfg.budget.sigma_w2 = parse_double(l, k, v); }},
        {"budget.tx_power", [&](int l, auto& k, auto& v) { cfg.budget.tx_power = parse_double(l, k, v); }},
        {"slot.k_subcarriers", [&](int l, auto& k, auto& v) { cfg.slot.k_subcarriers = parse_int(l, k, v); }},
        {"slot.dl_data", [&](int l, auto& k, auto& v) { cfg.slot.dl_data = parse_index_list(l, k, v); }},
        {"slot.dl_p0", [&](int l, auto& k, auto& v) { cfg.slot.dl_p0 = parse_index_list(l, k, v); }},
        {"slot.dl_p1", [&](int l, auto& k, auto& v) { cfg.slot.dl_p1 = parse_index_list(l, k, v); }},
        {"slot.dl_p2", [&](int l, auto& k, auto& v) { cfg.slot.dl_p2 = parse_index_list(l, k, v); }},
        {"slot.ul_data", [&](int l, auto& k, auto& v) { cfg.slot.ul_data = parse_index_list(l, k, v); }},
        {"slot.ul_p0", [&](int l, auto& k, auto& v) { cfg.slot.ul_p0 = parse_index_list(l, k, v); }},
        {"slot.ul_p1", [&](int l, auto& k, auto& v) { cfg.slot.ul_p1 = parse_index_list(l, k, v); }},
        {"adv.n_r", [&](int l, auto& k, auto& v) { cfg.adversary.n_r = parse_int(l, k, v); }},
        {"adv.n_n", [&](int l, auto& k, auto& v) { cfg.adversary.n_n = parse_int(l, k, v); }},
        {"adv.n_n_prime", [&](int l, auto& k, auto& v) { cfg.adversary.n_n_prime = parse_int(l, k, v); }},
        {"adv.activation_symbol", [&](int l, auto& k, auto& v) { cfg.adversary.activation_symbol = parse_int(l, k, v); }},
        {"adv.mode", [&](int l, auto& k, auto& v) {
             cfg.adversary.mode = parse_enum<AdversaryMode>(
                 l, k, v, {{"off", AdversaryMode::off}, {"eavesdrop", AdversaryMode::eavesdrop},
                           {"inject", AdversaryMode::inject}, {"pollute_cep", AdversaryMode::pollute_cep}});
         }},
        {"run.seed", [&](int l, auto& k, auto& v) {
             const long long s = parse_integer(l, k, v);
             if (s < 0) {
                 std::uint64_t u = 0;
                 auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), u);
                 (void)ptr;
                 if (ec != std::errc()) throw ParseError(l, k + ": expected an unsigned integer");
                 cfg.seed = u;
             } else {
                 cfg.seed = static_cast<std::uint64_t>(s);
             }
         }},
        {"run.trials", [&](int l, auto& k, auto& v) { cfg.trials = parse_int(l, k, v); }},
        {"run.gain_mode", [&](int l, auto& k, auto& v) {
             cfg.gain_mode = parse_enum<GainMode>(
                 l, k, v, {{"incoherent", GainMode::incoherent}, {"coherent", GainMode::coherent}});
         }},
        {"run.constellation", [&](int l, auto& k, auto& v) {
             cfg.constellation = parse_enum<Constellation>(
                 l, k, v, {{"qpsk", Constellation::qpsk}, {"qam16", Constellation::qam16}});
         }},
        {"run.scheme", [&](int l, auto& k, auto& v) {
             cfg.scheme = parse_enum<Scheme>(
                 l, k, v, {{"nonreciprocal", Scheme::nonreciprocal}, {"reciprocal", Scheme::reciprocal}});
         }},
        {"run.eve_link", [&](int l, auto& k, auto& v) {
             cfg.eve_link = parse_enum<EveLink>(l, k, v, {{"ue", EveLink::ue}, {"bs", EveLink::bs}});
         }},
        {"run.noiseless", [&](int l, auto& k, auto& v) { cfg.noiseless = parse_bool(l, k, v); }},
        {"run.perfect_csi", [&](int l, auto& k, auto& v) { cfg.perfect_csi = parse_bool(l, k, v); }},
        {"run.validation_symbols", [&](int l, auto& k, auto& v) { cfg.validation_symbols = parse_int(l, k, v); }},
        {"run.detect_threshold", [&](int l, auto& k, auto& v) { cfg.detect_threshold = parse_double(l, k, v); }},
        {"run.literal_reciprocal_fake", [&](int l, auto& k, auto& v) { cfg.literal_reciprocal_fake = parse_bool(l, k, v); }},
        {"cep.max_backoff", [&](int l, auto& k, auto& v) { cfg.max_backoff = parse_int(l, k, v); }},
    };

    for (const auto& [key, entry] : entries) {
        const auto it = setters.find(key);
        if (it == setters.end()) throw ParseError(entry.first, "unknown key '" + key + "'");
        it->second(entry.first, key, entry.second);
    }
    cfg.validate();
    return cfg;
}

ScenarioConfig load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read configuration file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return load_scenario(text.str());
}

std::string serialize_scenario(const ScenarioConfig& cfg) {
    std::ostringstream out;
    auto put = [&out](const char* key, const std::string& value) {
        out << key << " = " << value << "\n";
    };
    auto put_opt = [&](const char* key, const std::optional<double>& v) {
        if (v) put(key, format_double(*v));
    };
    put("geom.bs", format_position(cfg.bs));
    put("geom.ue", format_position(cfg.ue));
    put("geom.dris", format_position(cfg.dris));
    put("geom.aris", format_position(cfg.aris));
    put("geom.eve", format_position(cfg.eve));
    put("geom.carrier_ghz", format_double(cfg.carrier_ghz));
    put("ris.m_a", std::to_string(cfg.m_a));
    put("ris.m_e", std::to_string(cfg.m_e));
    put("ris.dris_active_from", std::to_string(cfg.dris_active_from));
    put_opt("ris.phi_dl", cfg.phi_dl);
    put_opt("ris.phi_ul", cfg.phi_ul);
    put("budget.p_max_dbm", format_double(cfg.p_max_dbm));
    put("budget.noise_dbm", format_double(cfg.noise_dbm));
    put_opt("budget.sigma_d2", cfg.budget.sigma_d2);
    put_opt("budget.sigma_qa2", cfg.budget.sigma_qa2);
    put_opt("budget.sigma_ga2", cfg.budget.sigma_ga2);
    put_opt("budget.sigma_qe2", cfg.budget.sigma_qe2);
    put_opt("budget.sigma_ge2", cfg.budget.sigma_ge2);
    put_opt("budget.sigma_gv2", cfg.budget.sigma_gv2);
    put_opt("budget.sigma_w2", cfg.budget.sigma_w2);
    put_opt("budget.tx_power", cfg.budget.tx_power);
    put("slot.n_total", std::to_string(cfg.slot.n_total));
    put("slot.k_subcarriers", std::to_string(cfg.slot.k_subcarriers));
    put("slot.dl_data", format_list(cfg.slot.dl_data));
    put("slot.dl_p0", format_list(cfg.slot.dl_p0));
    put("slot.dl_p1", format_list(cfg.slot.dl_p1));
    put("slot.dl_p2", format_list(cfg.slot.dl_p2));
    put("slot.ul_data", format_list(cfg.slot.ul_data));
    put("slot.ul_p0", format_list(cfg.slot.ul_p0));
    put("slot.ul_p1", format_list(cfg.slot.ul_p1));
    put("adv.n_r", std::to_string(cfg.adversary.n_r));
    put("adv.n_n", std::to_string(cfg.adversary.n_n));
    put("adv.n_n_prime", std::to_string(cfg.adversary.n_n_prime));
    put("adv.activation_symbol", std::to_string(cfg.adversary.activation_symbol));
    put("adv.mode", to_string(cfg.adversary.mode));
    put("run.seed", std::to_string(cfg.seed));
    put("run.trials", std::to_string(cfg.trials));
    put("run.gain_mode", to_string(cfg.gain_mode));
    put("run.constellation", to_string(cfg.constellation));
    put("run.scheme", to_string(cfg.scheme));
    put("run.eve_link", cfg.eve_link == EveLink::bs ? "bs" : "ue");
    put("run.noiseless", cfg.noiseless ? "true" : "false");
    put("run.perfect_csi", cfg.perfect_csi ? "true" : "false");
    put("run.validation_symbols", std::to_string(cfg.validation_symbols));
    put("run.detect_threshold", format_double(cfg.detect_threshold));
    put("run.literal_reciprocal_fake", cfg.literal_reciprocal_fake ? "true" : "false");
    put("cep.max_backoff", std::to_string(cfg.max_backoff));
    return out.str();
}

}  // namespace dris
