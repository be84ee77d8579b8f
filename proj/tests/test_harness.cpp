#include <doctest.h>

#include <cmath>
#include <sstream>

#include "dris/analysis.hpp"
#include "dris/harness.hpp"
#include "dris/report.hpp"

using namespace dris;

namespace {
ScenarioConfig small_config() {
    ScenarioConfig cfg;
    cfg.m_a = 32;
    cfg.m_e = 32;
    cfg.budget = BudgetOverrides::all_of(LinkBudget{});
    cfg.budget.sigma_d2 = 1e-20;
    cfg.seed = 5;
    return cfg;
}
}  // namespace

TEST_CASE("trials are deterministic per index and distinct across indices") {
    ScenarioConfig cfg = small_config();
    cfg.adversary.mode = AdversaryMode::inject;
    const TrialMetrics a = run_trial(cfg, 3);
    const TrialMetrics b = run_trial(cfg, 3);
    const TrialMetrics c = run_trial(cfg, 4);
    CHECK(a == b);
    CHECK_FALSE(a == c);
    cfg.seed = 6;
    CHECK_FALSE(run_trial(cfg, 3) == a);
}

TEST_CASE("worker count does not change trial results") {
    ScenarioConfig cfg = small_config();
    cfg.adversary.mode = AdversaryMode::eavesdrop;
    const auto one = run_trials(cfg, 57, 1);
    const auto three = run_trials(cfg, 57, 3);
    const auto many = run_trials(cfg, 57, 16);
    REQUIRE(one.size() == 57);
    CHECK(one == three);
    CHECK(one == many);
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i] == run_trial(cfg, i));
}

TEST_CASE("noiseless clean slot decodes every data symbol") {
    ScenarioConfig cfg = small_config();
    cfg.noiseless = true;
    for (int t = 0; t < 50; ++t) {
        const TrialMetrics m = run_trial(cfg, t);
        CHECK(m.dl_symbols == static_cast<int>(cfg.slot.dl_data.size()));
        CHECK(m.ul_symbols == static_cast<int>(cfg.slot.ul_data.size()));
        CHECK(m.dl_errors == 0);
        CHECK(m.ul_errors == 0);
        CHECK_FALSE(m.pollution_detected);
        CHECK(m.tag == ScenarioTag::opt1);
    }
}

TEST_CASE("instantaneous SNRs average to the closed forms") {
    ScenarioConfig cfg = small_config();
    cfg.budget.sigma_d2 = 1.0;
    cfg.budget.sigma_gv2 = 3.0;
    cfg.budget.sigma_w2 = 2.0;
    const auto rows = run_sweep(cfg, SweepAxis::m_a, {32}, 4000, 2);
    REQUIRE(rows.size() == 1);
    const SweepRow& r = rows[0];
    CHECK(r.has_empirical);
    CHECK(r.snr_a_hat.value == doctest::Approx(r.rho_a).epsilon(0.05));
    CHECK(r.snr_d_hat.value == doctest::Approx(r.rho_d).epsilon(0.08));
    CHECK(r.snr_e_hat.value == doctest::Approx(r.rho_e).epsilon(0.05));
    CHECK(r.rho_a == doctest::Approx(32 / 2.0));
    CHECK(r.rho_e == doctest::Approx(32 * 3 / 2.0));
    const ValidationReport v = cross_validate(rows);
    CHECK(v.entries.size() >= 4);
    for (const auto& e : v.entries) CHECK(std::abs(e.z) < 5.0);
}

TEST_CASE("cross-validation refuses closed-form-only rows") {
    const auto rows = analyze_sweep(small_config(), SweepAxis::m_a, {8, 16});
    CHECK_FALSE(rows[0].has_empirical);
    CHECK_THROWS(cross_validate(rows));
}

TEST_CASE("exposure sweep maps to integer timers and real closed-form timers") {
    ScenarioConfig cfg;
    const SweepPoint p = apply_axis(cfg, SweepAxis::eta_s, 0.7);
    CHECK(p.timers.n_r == doctest::Approx(0.3 * 22));
    CHECK(p.timers.n_n == doctest::Approx(0.6 * 22));
    CHECK(p.cfg.adversary.n_r == 7);
    CHECK(p.cfg.adversary.n_n == 13);
    CHECK(p.cfg.adversary.n_n_prime >= p.cfg.adversary.n_n);
    const SweepRow r = closed_form_row(cfg, SweepAxis::eta_s, 0.7);
    CHECK(r.e_ar == doctest::Approx(asr_timed(r.c_ar, r.c_er, p.timers.n_r, 22)));
    CHECK(r.e_an == doctest::Approx(asr_timed(r.c_a, r.c_e, p.timers.n_n, 22)));
    CHECK(r.eta_n == doctest::Approx(19.0 / 22.0));
    CHECK(r.eta_r == doctest::Approx(18.0 / 22.0));
    CHECK(r.eta_d == doctest::Approx(20.0 / 22.0));
    CHECK_THROWS_AS(apply_axis(cfg, SweepAxis::eta_s, 1.5), ValidationError);
    CHECK_THROWS_AS(apply_axis(cfg, SweepAxis::m_a, 2.5), ValidationError);
}

TEST_CASE("transmit power axis overrides the budget") {
    const SweepPoint p = apply_axis(ScenarioConfig{}, SweepAxis::tx_power_dbm, 10.0);
    REQUIRE(p.cfg.budget.tx_power.has_value());
    CHECK(*p.cfg.budget.tx_power == doctest::Approx(10.0));
    const SweepRow lo = closed_form_row(ScenarioConfig{}, SweepAxis::tx_power_dbm, 0.0);
    const SweepRow hi = closed_form_row(ScenarioConfig{}, SweepAxis::tx_power_dbm, 10.0);
    CHECK(hi.rho_a == doctest::Approx(10.0 * lo.rho_a));
}

TEST_CASE("sweep axis names round-trip") {
    for (SweepAxis a : {SweepAxis::m_a, SweepAxis::m_e, SweepAxis::eta_s, SweepAxis::tx_power_dbm,
                        SweepAxis::n_n_prime}) {
        CHECK(parse_sweep_axis(to_string(a)) == a);
    }
    CHECK_THROWS_AS(parse_sweep_axis("m_b"), ValidationError);
}

TEST_CASE("walkthrough configurations produce their tags") {
    ScenarioConfig cfg = small_config();
    cfg.noiseless = true;
    for (ScenarioTag tag : {ScenarioTag::opt1, ScenarioTag::opt2, ScenarioTag::polluted}) {
        std::vector<CepTraceEntry> trace;
        const TrialMetrics m = run_trial(cep_demo_config(cfg, tag), 0, &trace);
        CHECK(m.tag == tag);
        CHECK_FALSE(trace.empty());
    }
}

TEST_CASE("pollution is detected and triggers backoff") {
    ScenarioConfig cfg = small_config();
    cfg.noiseless = true;
    cfg.adversary.mode = AdversaryMode::pollute_cep;
    int detected = 0;
    for (int t = 0; t < 200; ++t) {
        const TrialMetrics m = run_trial(cfg, t);
        CHECK(m.tag == ScenarioTag::polluted);
        if (m.pollution_detected) {
            ++detected;
            CHECK(m.backoff_slots >= 1);
            CHECK(m.backoff_slots <= cfg.max_backoff);
        } else {
            CHECK(m.backoff_slots == 0);
        }
    }
    CHECK(detected > 100);
}

TEST_CASE("CSV escaping follows RFC 4180") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_escape("two\nlines") == "\"two\nlines\"");
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(NAN) == "nan");
    CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("CSV layout: metadata, header, rows") {
    const ScenarioConfig cfg = small_config();
    const auto rows = analyze_sweep(cfg, SweepAxis::m_a, {8, 16, 32});
    const std::string csv = render_csv(sweep_table(rows, cfg, "analyze"));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "# schema=1");
    int meta = 1, data = 0;
    std::string header;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) == 0) {
            CHECK(data == 0);
            CHECK(header.empty());
            ++meta;
        } else if (header.empty()) {
            header = line;
        } else {
            ++data;
        }
    }
    CHECK(data == 3);
    CHECK(header.find("value") != std::string::npos);
    CHECK(csv.find("# seed=5\n") != std::string::npos);
    CHECK(csv.find("# config_hash=") != std::string::npos);
    CHECK(render_csv(sweep_table(rows, cfg, "analyze")) == csv);
    CsvTable bad{{}, {"a", "b"}, {{"1"}}};
    CHECK_THROWS(render_csv(bad));
}

TEST_CASE("config hash tracks configuration changes") {
    ScenarioConfig a = small_config();
    ScenarioConfig b = a;
    CHECK(config_hash(a) == config_hash(b));
    b.m_e = 33;
    CHECK(config_hash(a) != config_hash(b));
}

TEST_CASE("invalid configurations are rejected before simulating") {
    ScenarioConfig cfg = small_config();
    cfg.m_a = 0;
    CHECK_THROWS_AS(run_trial(cfg, 0), ValidationError);
    CHECK(run_trials(small_config(), 0, 1).empty());
    CHECK_THROWS_AS(run_trials(small_config(), -1, 1), ValidationError);
    CHECK_THROWS_AS(run_trials(small_config(), 4, 0), ValidationError);
}
