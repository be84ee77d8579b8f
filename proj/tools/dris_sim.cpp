// SPDX-License-Identifier: Apache-2.0
// Command-line front end over the simulation library.
#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dris/acceptance.hpp"
#include "dris/harness.hpp"
#include "dris/report.hpp"
#include "dris/scenario.hpp"

namespace {

dris::ScenarioConfig load_config(const std::string& path) {
    dris::ScenarioConfig cfg = path.empty() ? dris::ScenarioConfig{} : dris::load_scenario_file(path);
    if (const char* env = std::getenv("DRIS_SEED"); env && *env) {
        std::size_t used = 0;
        const std::string text(env);
        unsigned long long seed = 0;
        try {
            seed = std::stoull(text, &used, 0);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != text.size() || text.front() == '-') {
            throw dris::ValidationError("DRIS_SEED", "not an unsigned integer: '" + text + "'");
        }
        cfg.seed = seed;
    }
    cfg.validate();
    return cfg;
}

std::vector<double> parse_values(const std::string& list) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (item.empty() || used != item.size()) throw dris::ValidationError("values", "bad number '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw dris::ValidationError("values", "empty list");
    return out;
}

dris::ScenarioTag parse_tag(const std::string& s) {
    if (s == "opt1") return dris::ScenarioTag::opt1;
    if (s == "opt2") return dris::ScenarioTag::opt2;
    if (s == "polluted") return dris::ScenarioTag::polluted;
    throw dris::ValidationError("scenario", "expected opt1, opt2 or polluted, got '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"D-RIS link-level simulator"};
    app.require_subcommand(1);

    std::string config, sweep, values, out = "-", validation_out, plot_out, scenario;
    int trials = 1000;
    int workers = 1;
    std::vector<int> only;

    auto* analyze = app.add_subcommand("analyze", "closed-form sweep");
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo sweep with closed forms and cross-validation");
    auto* cep = app.add_subcommand("cep-demo", "per-stage channel estimation trace");
    auto* validate = app.add_subcommand("validate", "run the acceptance suite");

    for (auto* sub : {analyze, simulate, cep, validate}) {
        sub->add_option("--config", config, "scenario file (defaults to the built-in geometry)");
    }
    for (auto* sub : {analyze, simulate}) {
        sub->add_option("--sweep", sweep, "sweep axis")->required();
        sub->add_option("--values", values, "comma-separated axis values")->required();
        sub->add_option("--plot", plot_out, "also write whitespace-separated plot data");
    }
    for (auto* sub : {analyze, simulate, cep}) sub->add_option("--out", out, "output CSV, '-' for stdout");
    simulate->add_option("--trials", trials, "trials per sweep point")->check(CLI::PositiveNumber);
    simulate->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    simulate->add_option("--validation-out", validation_out, "cross-validation CSV");
    cep->add_option("--scenario", scenario, "opt1, opt2 or polluted")->required();
    validate->add_option("--only", only, "criterion ids to run");

    CLI11_PARSE(app, argc, argv);

    try {
        const dris::ScenarioConfig cfg = load_config(config);
        if (*analyze) {
            const auto rows = dris::analyze_sweep(cfg, dris::parse_sweep_axis(sweep), parse_values(values));
            dris::write_text(out, dris::render_csv(dris::sweep_table(rows, cfg, "analyze")));
            if (!plot_out.empty()) dris::write_text(plot_out, dris::render_plot_data(rows));
            return 0;
        }
        if (*simulate) {
            const auto rows =
                dris::run_sweep(cfg, dris::parse_sweep_axis(sweep), parse_values(values), trials, workers);
            dris::write_text(out, dris::render_csv(dris::sweep_table(rows, cfg, "simulate")));
            const dris::ValidationReport report = dris::cross_validate(rows);
            if (!validation_out.empty()) {
                dris::write_text(validation_out, dris::render_csv(dris::validation_table(report, cfg)));
            }
            if (!plot_out.empty()) dris::write_text(plot_out, dris::render_plot_data(rows));
            if (report.any_flagged()) {
                std::cerr << "warning: some empirical estimates deviate from closed forms by more than 3 sigma\n";
            }
            return 0;
        }
        if (*cep) {
            const dris::ScenarioTag tag = parse_tag(scenario);
            const dris::ScenarioConfig demo = dris::cep_demo_config(cfg, tag);
            std::vector<dris::CepTraceEntry> trace;
            dris::run_trial(demo, 0, &trace);
            dris::write_text(out, dris::render_csv(dris::cep_table(trace, demo, tag)));
            return 0;
        }
        bool all = true;
        dris::run_acceptance(cfg, only, [&](const dris::CriterionResult& r) {
            all = all && r.passed;
            std::cout << dris::format_result_line(r) << std::endl;
        });
        return all ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
}
