// SPDX-License-Identifier: Apache-2.0
#include "dris/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace dris {

std::uint64_t config_hash(const ScenarioConfig& cfg) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : serialize_scenario(cfg)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<std::string> standard_metadata(const ScenarioConfig& cfg, const std::string& command) {
    char hash[24];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(config_hash(cfg)));
    return {"schema=" + std::to_string(kCsvSchema), "command=" + command, "seed=" + std::to_string(cfg.seed),
            std::string("config_hash=") + hash, "gain_mode=" + to_string(cfg.gain_mode),
            "scheme=" + to_string(cfg.scheme),
            "eve_cascade_elements=m_e"};
}

std::string render_csv(const CsvTable& table) {
    std::ostringstream out;
    for (const auto& m : table.metadata) out << "# " << m << "\n";
    auto line = [&out](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out << ',';
            out << csv_escape(fields[i]);
        }
        out << "\n";
    };
    line(table.header);
    for (const auto& r : table.rows) {
        if (r.size() != table.header.size()) throw std::logic_error("render_csv: row width differs from header");
        line(r);
    }
    return out.str();
}

CsvTable sweep_table(const std::vector<SweepRow>& rows, const ScenarioConfig& cfg, const std::string& command) {
    CsvTable t;
    t.metadata = standard_metadata(cfg, command);
    t.header = {"axis", "value", "seed", "trials", "n_r", "n_n", "n_n_prime", "eta_d", "eta_n", "eta_r",
                "rho_d", "rho_a", "rho_e", "c_d", "c_a", "c_ar", "c_e", "c_er", "e_ar", "e_an",
                "e_an_approx_printed", "e_an_approx_consistent", "beta", "p2", "p_r", "p_r_reciprocal"};
    static const char* empirical[] = {"p2_hat", "snr_d_hat", "snr_a_hat", "snr_e_hat", "ser_dl", "ser_ul",
                                      "eve_ser_dl", "eve_ser_ul", "fake_rate", "detect_rate"};
    for (const char* e : empirical) {
        t.header.push_back(e);
        t.header.push_back(std::string(e) + "_ci95");
    }
    for (const auto& r : rows) {
        std::vector<std::string> f = {r.axis, format_number(r.value), std::to_string(r.seed),
                                      std::to_string(r.trials), format_number(r.timers.n_r),
                                      format_number(r.timers.n_n), format_number(r.timers.n_n_prime),
                                      format_number(r.eta_d), format_number(r.eta_n), format_number(r.eta_r),
                                      format_number(r.rho_d), format_number(r.rho_a), format_number(r.rho_e),
                                      format_number(r.c_d), format_number(r.c_a), format_number(r.c_ar),
                                      format_number(r.c_e), format_number(r.c_er), format_number(r.e_ar),
                                      format_number(r.e_an), format_number(r.e_an_printed),
                                      format_number(r.e_an_consistent), format_number(r.beta),
                                      format_number(r.p2), format_number(r.p_r), format_number(r.p_r_reciprocal)};
        const Estimate* est[] = {&r.p2_hat, &r.snr_d_hat, &r.snr_a_hat, &r.snr_e_hat, &r.ser_dl, &r.ser_ul,
                                 &r.eve_ser_dl, &r.eve_ser_ul, &r.fake_rate, &r.detect_rate};
        for (const Estimate* e : est) {
            f.push_back(r.has_empirical ? format_number(e->value) : "");
            f.push_back(r.has_empirical ? format_number(e->radius) : "");
        }
        t.rows.push_back(std::move(f));
    }
    return t;
}

CsvTable validation_table(const ValidationReport& report, const ScenarioConfig& cfg) {
    CsvTable t;
    t.metadata = standard_metadata(cfg, "simulate-validation");
    t.header = {"row", "metric", "empirical", "closed_form", "z", "flagged"};
    for (const auto& e : report.entries) {
        t.rows.push_back({std::to_string(e.row), e.metric, format_number(e.empirical),
                          format_number(e.closed_form), format_number(e.z), e.flagged ? "true" : "false"});
    }
    return t;
}

CsvTable cep_table(const std::vector<CepTraceEntry>& trace, const ScenarioConfig& cfg, ScenarioTag tag) {
    CsvTable t;
    t.metadata = standard_metadata(cfg, "cep-demo");
    t.metadata.push_back("scenario=" + to_string(tag));
    t.header = {"kind", "side", "label", "symbol", "dris_on", "eve_on", "value_re", "value_im",
                "truth_re", "truth_im", "abs_error"};
    for (const auto& e : trace) {
        t.rows.push_back({e.kind, e.side, e.label, e.symbol >= 0 ? std::to_string(e.symbol) : "",
                          e.dris_on ? "1" : "0", e.eve_on ? "1" : "0", format_number(e.value.real()),
                          format_number(e.value.imag()), format_number(e.truth.real()),
                          format_number(e.truth.imag()), format_number(std::abs(e.value - e.truth))});
    }
    return t;
}

std::string render_plot_data(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "# x c_d c_a c_e e_ar e_an p2 p_r p_r_reciprocal p2_hat\n";
    for (const auto& r : rows) {
        out << format_number(r.value) << ' ' << format_number(r.c_d) << ' ' << format_number(r.c_a) << ' '
            << format_number(r.c_e) << ' ' << format_number(r.e_ar) << ' ' << format_number(r.e_an) << ' '
            << format_number(r.p2) << ' ' << format_number(r.p_r) << ' ' << format_number(r.p_r_reciprocal)
            << ' ' << (r.has_empirical ? format_number(r.p2_hat.value) : "nan") << "\n";
    }
    return out.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("failed writing to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    out.close();
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace dris
