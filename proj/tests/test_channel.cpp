#include <doctest.h>

#include <cmath>

#include "dris/channel.hpp"
#include "dris/random.hpp"
#include "dris/ris.hpp"

using namespace dris;

TEST_CASE("indoor-factory NLOS pathloss matches hand-computed values") {
    // 33 + 25.5 log10(d) + 20 log10(f), evaluated by hand
    CHECK(pathloss_nlos_db(std::sqrt(125.0), 3.5) == doctest::Approx(70.61696).epsilon(1e-6));
    CHECK(pathloss_nlos_db(5.0, 3.5) == doctest::Approx(61.70510).epsilon(1e-6));
    CHECK(pathloss_nlos_db(1.0, 1.0) == doctest::Approx(33.0));
    CHECK(pathloss_nlos_gain(10.0, 1.0) == doctest::Approx(std::pow(10.0, -5.85)));
    CHECK_THROWS_AS(pathloss_nlos_db(0.5, 3.5), ValidationError);
    CHECK_THROWS_AS(pathloss_nlos_db(10.0, 0.0), ValidationError);
    CHECK_THROWS_AS(pathloss_nlos_db(NAN, 3.5), ValidationError);
}

TEST_CASE("pathloss increases with distance and frequency") {
    double prev = pathloss_nlos_db(1.0, 3.5);
    for (double d = 1.5; d < 200.0; d *= 1.5) {
        const double pl = pathloss_nlos_db(d, 3.5);
        CHECK(pl > prev);
        prev = pl;
    }
    CHECK(pathloss_nlos_db(10.0, 28.0) > pathloss_nlos_db(10.0, 3.5));
}

TEST_CASE("default geometry yields symmetric cascade legs") {
    const LinkBudget b = derive_link_budget(ScenarioConfig{});
    CHECK(b.sigma_qa2 == doctest::Approx(b.sigma_ga2));
    CHECK(b.sigma_qa2 == doctest::Approx(b.sigma_qe2));
    CHECK(b.sigma_qa2 == doctest::Approx(b.sigma_ge2));
    CHECK(linear_to_db(b.sigma_qa2) == doctest::Approx(-70.61696).epsilon(1e-6));
    CHECK(linear_to_db(b.sigma_gv2) == doctest::Approx(-61.70510).epsilon(1e-6));
    CHECK(linear_to_db(b.tx_power) == doctest::Approx(-30.0));
}

TEST_CASE("overrides win over geometry") {
    ScenarioConfig cfg;
    cfg.budget.sigma_gv2 = 0.25;
    cfg.budget.tx_power = 2.0;
    const LinkBudget b = derive_link_budget(cfg);
    CHECK(b.sigma_gv2 == 0.25);
    CHECK(b.tx_power == 2.0);
    ScenarioConfig clash;
    clash.eve = clash.aris;
    try {
        derive_link_budget(clash);
        FAIL("expected an error");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "geom.aris/geom.eve");
    }
}

TEST_CASE("cascaded response is the phase-weighted sum") {
    const std::vector<double> ph = {0.0, kPi / 2, kPi};
    const std::vector<Complex> a = {{1, 0}, {2, 0}, {0, 1}};
    const std::vector<Complex> b = {{1, 1}, {0, 1}, {1, 0}};
    // 1*(1+j) + j*2*j + (-1)*j*1 = 1 + j - 2 - j = -1
    const Complex h = cascaded_response(ph, a, b);
    CHECK(h.real() == doctest::Approx(-1.0));
    CHECK(h.imag() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(cascaded_response({0.0}, a, b), std::invalid_argument);
}

TEST_CASE("aligned phases add every element coherently") {
    RandomStream rng(3);
    std::vector<Complex> q(64), g(64);
    double mag = 0.0;
    for (int i = 0; i < 64; ++i) {
        q[i] = rng.complex_normal(1.0);
        g[i] = rng.complex_normal(1.0);
        mag += std::abs(q[i] * g[i]);
    }
    const Complex h = cascaded_response(align_static_phases(q, g), q, g);
    CHECK(h.real() == doctest::Approx(mag));
    CHECK(std::abs(h.imag()) < 1e-9);
}

TEST_CASE("effective channels carry the dynamic phases") {
    LinkBudget b;
    RandomStream rng(11);
    const ChannelRealization real = sample_realization(b, 8, 4, rng);
    CHECK(real.q_a.size() == 8);
    CHECK(real.g_v.size() == 4);
    RisPanel dris{8, random_static_phases(8, rng), 0.3, -1.2, 1};
    RisPanel adv{4, random_static_phases(4, rng), 0.0, 0.0, 0};
    const EffectiveChannels e = effective_channels(real, dris, adv);
    CHECK(std::abs(e.h_a_dl - e.h_a * unit_phasor(0.3)) < 1e-12);
    CHECK(std::abs(e.h_a_ul - e.h_a * unit_phasor(-1.2)) < 1e-12);
    CHECK(std::abs(e.h_e_u - cascaded_response(adv.static_phases, real.g_v, real.g_e)) < 1e-12);
    CHECK(std::abs(e.h_e_b - cascaded_response(adv.static_phases, real.g_v, real.q_e)) < 1e-12);

    const SlotPlan slot = default_slot_plan(22);
    const PhaseSchedule sched = schedule_phases(dris, slot, true);
    const int dl = slot.dl_data.front();
    const int ul = slot.ul_data.front();
    CHECK(effective_response(e, sched, slot, dl, false, false) == e.h_d);
    CHECK(std::abs(effective_response(e, sched, slot, dl, true, false) - (e.h_d + e.h_a_dl)) < 1e-12);
    CHECK(std::abs(effective_response(e, sched, slot, ul, true, true) - (e.h_d + e.h_a_ul + e.h_e_b)) < 1e-12);
    CHECK(std::abs(effective_response(e, sched, slot, dl, false, true) - (e.h_d + e.h_e_u)) < 1e-12);
    CHECK_THROWS_AS(effective_response(e, sched, slot, 99, true, true), std::out_of_range);
}

TEST_CASE("sampling is reproducible per stream") {
    LinkBudget b;
    RandomStream r1(5, 9), r2(5, 9), r3(5, 10);
    const auto a = sample_realization(b, 4, 4, r1);
    const auto c = sample_realization(b, 4, 4, r2);
    const auto d = sample_realization(b, 4, 4, r3);
    CHECK(a.h_d == c.h_d);
    CHECK(a.g_v == c.g_v);
    CHECK(a.h_d != d.h_d);
    CHECK_THROWS_AS(sample_realization(b, 0, 4, r1), ValidationError);
}

TEST_CASE("complex normal has the requested variance split evenly") {
    RandomStream rng(1234);
    const int n = 200000;
    double re2 = 0, im2 = 0, cross = 0;
    for (int i = 0; i < n; ++i) {
        const Complex c = rng.complex_normal(4.0);
        re2 += c.real() * c.real();
        im2 += c.imag() * c.imag();
        cross += c.real() * c.imag();
    }
    CHECK(re2 / n == doctest::Approx(2.0).epsilon(0.02));
    CHECK(im2 / n == doctest::Approx(2.0).epsilon(0.02));
    CHECK(std::abs(cross / n) < 0.05);
}

TEST_CASE("uniform draws are in range and centred") {
    RandomStream rng(31, 2);
    double sum = 0;
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        CHECK_UNARY(u >= 0.0);
        CHECK_UNARY(u < 1.0);
        sum += u;
    }
    CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
    for (int i = 0; i < 1000; ++i) {
        const int k = rng.uniform_int(-2, 3);
        CHECK_UNARY(k >= -2);
        CHECK_UNARY(k <= 3);
    }
    CHECK_THROWS(rng.uniform_int(3, 2));
}
