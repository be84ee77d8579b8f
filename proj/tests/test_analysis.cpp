#include <doctest.h>

#include <cmath>

#include "dris/analysis.hpp"
#include "dris/channel.hpp"
#include "dris/random.hpp"
#include "dris/ris.hpp"

using namespace dris;

TEST_CASE("achievable rate hand values") {
    CHECK(achievable_rate({1.0, 1.0}) == doctest::Approx(1.0));
    CHECK(achievable_rate({0.5, 3.0}) == doctest::Approx(1.0));
    CHECK(achievable_rate({19.0 / 22.0, 0.0}) == 0.0);
    CHECK_THROWS_AS(achievable_rate({0.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(achievable_rate({1.0, -1.0}), ValidationError);
}

TEST_CASE("closed-form SNRs use noise referred to transmit power") {
    LinkBudget b;
    b.sigma_qa2 = 2.0;
    b.sigma_ga2 = 3.0;
    b.sigma_qe2 = 5.0;
    b.sigma_ge2 = 7.0;
    b.sigma_gv2 = 11.0;
    b.sigma_d2 = 13.0;
    b.sigma_w2 = 4.0;
    b.tx_power = 2.0;
    const SnrSet s = snr_closed_form(b, 10, 3);
    CHECK(s.rho_a == doctest::Approx(10 * 6 / 2.0));
    CHECK(s.rho_eb == doctest::Approx(3 * 55 / 2.0));
    CHECK(s.rho_eu == doctest::Approx(3 * 77 / 2.0));
    CHECK(s.rho_d == doctest::Approx(6.5));
    CHECK(s.rho_e(EveLink::bs) == s.rho_eb);
    CHECK(s.rho_e(EveLink::ue) == s.rho_eu);
    CHECK(eve_leg_gain(b, EveLink::bs) == 5.0);
    CHECK(eve_leg_gain(b, EveLink::ue) == 7.0);
}

TEST_CASE("secrecy rate forms") {
    CHECK(asr_basic(5.0, 2.0, 10.0, 3.0) == 3.0);
    CHECK(asr_basic(5.0, 7.0, 3.0, 10.0) == 0.0);
    CHECK(asr_timed(5.0, 2.0, 11.0, 22) == doctest::Approx(4.0));
    CHECK(asr_timed(5.0, 2.0, 22.0, 22) == 5.0);
    CHECK(asr_timed(5.0, 2.0, 40.0, 22) == 5.0);
    CHECK(asr_timed(5.0, 2.0, 0.0, 22) == 3.0);
    CHECK_THROWS_AS(asr_timed(1, 1, -1, 22), ValidationError);
    CHECK_THROWS_AS(asr_timed(1, 1, 1, 0), ValidationError);
}

TEST_CASE("asymptotic secrecy approximations hand values") {
    SecrecyInputs in;
    in.m_a = 4;
    in.m_e = 2;
    in.eta = 1.0;
    in.n_timer = 11;
    in.n_total = 22;
    const AsrApprox a = asr_approx(in);
    CHECK(a.printed == doctest::Approx(3.5));
    CHECK(a.consistent == doctest::Approx(1.5));
    CHECK(a.exact == doctest::Approx(std::log2(5.0) - 0.5 * std::log2(3.0)));
}

TEST_CASE("approximation converges to the exact form at high SNR") {
    SecrecyInputs in;
    in.m_a = 2000;
    in.m_e = 1000;
    in.eta = 19.0 / 22.0;
    in.n_timer = 5;
    in.n_total = 22;
    in.budget.sigma_w2 = 1e-6;
    const AsrApprox a = asr_approx(in);
    CHECK(a.consistent == doctest::Approx(a.exact).epsilon(1e-6));
    // huge arrays at tiny noise stay finite
    in.m_a = 1 << 30;
    in.budget.sigma_w2 = 1e-300;
    CHECK(std::isfinite(asr_approx(in).printed));
}

TEST_CASE("feasibility window") {
    CHECK(feasibility(3, 22, 22));
    CHECK(feasibility(3, 22, 30));
    CHECK_FALSE(feasibility(3, 22, 21));
    CHECK_FALSE(feasibility(22, 22, 30));
    CHECK_THROWS_AS(feasibility(-1, 22, 22), ValidationError);
}

TEST_CASE("fake probability closed form") {
    LinkBudget b;
    b.sigma_w2 = 0.5;
    FakeProbInputs in{b, 10, 20, EveLink::ue, 22, 11, false};
    const FakeProb p = fake_prob(in);
    CHECK(p.beta == doctest::Approx(10 + 1 + 0.5));
    CHECK(p.p2 == doctest::Approx(std::exp(-11.5 / 20.0)));
    CHECK(p.p_r == doctest::Approx(0.5 * p.p2));
    CHECK(p.p_r_reciprocal == p.p2);
    in.literal_reciprocal = true;
    CHECK(fake_prob(in).p_r_reciprocal == doctest::Approx(1.0 - p.p2));
    in.n_n_prime = 30;
    CHECK(fake_prob(in).p_r == 0.0);
    in.m_e = 0;
    CHECK_THROWS_AS(fake_prob(in), ValidationError);
}

TEST_CASE("fake probability falls with the D-RIS size and rises with Eve's") {
    LinkBudget b;
    double prev = 1.0;
    for (int m_a : {100, 200, 400, 800}) {
        const double p = fake_prob({b, m_a, 500, EveLink::ue, 22, 0, false}).p2;
        CHECK(p < prev);
        prev = p;
    }
    CHECK(fake_prob({b, 100, 1000, EveLink::ue, 22, 0, false}).p2 >
          fake_prob({b, 100, 500, EveLink::ue, 22, 0, false}).p2);
}

TEST_CASE("exceedance probability matches Monte Carlo over the cascade sampler") {
    LinkBudget b;
    b.sigma_gv2 = 2.0;
    const int m_a = 300, m_e = 400;
    const double p2 = fake_prob({b, m_a, m_e, EveLink::ue, 22, 0, false}).p2;
    const double beta = fake_threshold(b, m_a);
    RandomStream rng(17);
    const int n = 20000;
    int hits = 0;
    for (int t = 0; t < n; ++t) {
        const ChannelRealization r = sample_realization(b, 1, m_e, rng);
        const auto ph = random_static_phases(m_e, rng);
        hits += std::norm(cascaded_response(ph, r.g_v, r.g_e)) > beta;
    }
    const double se = std::sqrt(p2 * (1 - p2) / n);
    CHECK(std::abs(static_cast<double>(hits) / n - p2) < 4 * se + 0.005);
}
