#include <doctest.h>

#include <cmath>

#include "dris/cep.hpp"
#include "dris/channel.hpp"
#include "dris/random.hpp"
#include "dris/ris.hpp"

using namespace dris;

namespace {

struct Setup {
    SlotPlan slot = default_slot_plan(22);
    RisPanel dris;
    EffectiveChannels eff;
};

Setup make_setup(std::uint64_t seed) {
    Setup s;
    RandomStream rng(seed);
    const ChannelRealization real = sample_realization(LinkBudget{}, 16, 16, rng);
    s.dris = RisPanel{16, random_static_phases(16, rng), rng.uniform_phase(), rng.uniform_phase(), 1};
    RisPanel adv{16, random_static_phases(16, rng), 0.0, 0.0, 0};
    s.eff = effective_channels(real, s.dris, adv);
    return s;
}

// Pilot reception at one side; Eve reflects when eve_on(n) says so.
template <class EveOn>
std::vector<ReceivedSample> receive(const Setup& s, Side side, const ConstellationSymbol& pilot, EveOn eve_on,
                                    double noise, RandomStream& rng) {
    const PhaseSchedule sched = schedule_phases(s.dris, s.slot, true);
    std::vector<ReceivedSample> out;
    for (int n : s.slot.pilot_indices()) {
        if (s.slot.is_dl(n) != (side == Side::ue)) continue;
        const bool on = panel_on(s.dris, s.slot, n, true);
        const Complex h = effective_response(s.eff, sched, s.slot, n, on, eve_on(n));
        out.push_back(transmit(pilot, 1.0, h, 0.0, noise, rng, n));
    }
    return out;
}

}  // namespace

TEST_CASE("least-squares estimate inverts the pilot") {
    const auto p = symbol_from_index(3, Constellation::qpsk);
    const Complex h{0.4, -2.0};
    CHECK(std::abs(ls_estimate(h * p.value, p) - h) < 1e-15);
    CHECK_THROWS_AS(ls_estimate(h, ConstellationSymbol{{0, 0}, 0}), ValidationError);
}

TEST_CASE("clean noiseless recovery is exact at both ends") {
    const auto pilot = symbol_from_index(0, Constellation::qpsk);
    RandomStream rng(1);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Setup s = make_setup(seed);
        const auto off = [](int) { return false; };
        const CsiResult ue = recover_csi(collect_stages(receive(s, Side::ue, pilot, off, 0.0, rng), s.slot,
                                                        Side::ue, pilot),
                                         ScenarioTag::opt1);
        const CsiResult bs = bs_derive_dl(recover_csi(collect_stages(receive(s, Side::bs, pilot, off, 0.0, rng),
                                                                     s.slot, Side::bs, pilot),
                                                      ScenarioTag::opt1),
                                          s.dris);
        CHECK(std::abs(*ue.h_a_dl_hat - s.eff.h_a_dl) < 1e-12);
        CHECK(std::abs(*ue.h_a_ul_hat - s.eff.h_a_ul) < 1e-12);
        CHECK(std::abs(ue.h_d_hat - s.eff.h_d) < 1e-12);
        CHECK(std::abs(*bs.h_a_ul_hat - s.eff.h_a_ul) < 1e-12);
        CHECK(std::abs(*bs.h_a_dl_hat - s.eff.h_a_dl) < 1e-12);
        CHECK(ue.trusted());
    }
}

TEST_CASE("a silent stationary reflector only shifts the direct estimate") {
    const auto pilot = symbol_from_index(2, Constellation::qpsk);
    RandomStream rng(2);
    const Setup s = make_setup(7);
    const auto on = [](int) { return true; };
    const CsiResult ue =
        recover_csi(collect_stages(receive(s, Side::ue, pilot, on, 0.0, rng), s.slot, Side::ue, pilot),
                    ScenarioTag::opt2);
    CHECK(std::abs(*ue.h_a_dl_hat - s.eff.h_a_dl) < 1e-12);
    CHECK(std::abs(ue.h_d_hat - (s.eff.h_d + s.eff.h_e_u)) < 1e-12);
}

TEST_CASE("a reflector dark at p0 contaminates the cascade estimates") {
    const auto pilot = symbol_from_index(0, Constellation::qpsk);
    RandomStream rng(3);
    const Setup s = make_setup(9);
    const auto mirror = [&](int n) { return panel_on(s.dris, s.slot, n, true); };
    const CsiResult ue =
        recover_csi(collect_stages(receive(s, Side::ue, pilot, mirror, 0.0, rng), s.slot, Side::ue, pilot),
                    ScenarioTag::polluted);
    const CsiResult bs =
        recover_csi(collect_stages(receive(s, Side::bs, pilot, mirror, 0.0, rng), s.slot, Side::bs, pilot),
                    ScenarioTag::polluted);
    CHECK(std::abs(*ue.h_a_dl_hat - (s.eff.h_a_dl + s.eff.h_e_u)) < 1e-12);
    CHECK(std::abs(*ue.h_a_ul_hat - (s.eff.h_a_ul + s.eff.h_e_u)) < 1e-12);
    CHECK(std::abs(*bs.h_a_ul_hat - (s.eff.h_a_ul + s.eff.h_e_b)) < 1e-12);
    CHECK_FALSE(ue.trusted());
}

TEST_CASE("noisy cascade estimate error has twice the per-stage noise variance") {
    const auto pilot = symbol_from_index(1, Constellation::qpsk);
    RandomStream rng(4);
    const Setup s = make_setup(3);
    const double noise = 0.01;
    const int n = 20000;
    double err = 0;
    for (int i = 0; i < n; ++i) {
        const CsiResult ue = recover_csi(
            collect_stages(receive(s, Side::ue, pilot, [](int) { return false; }, noise, rng), s.slot, Side::ue,
                           pilot),
            ScenarioTag::opt1);
        err += std::norm(*ue.h_a_dl_hat - s.eff.h_a_dl);
    }
    CHECK(err / n == doctest::Approx(2 * noise).epsilon(0.03));
}

TEST_CASE("missing pilot samples and stages are reported") {
    const SlotPlan slot = default_slot_plan(22);
    const auto pilot = symbol_from_index(0, Constellation::qpsk);
    std::vector<ReceivedSample> partial = {{{1, 0}, {1, 0}, slot.dl_p0[0]}};
    CHECK_THROWS_AS(collect_stages(partial, slot, Side::ue, pilot), std::invalid_argument);
    StageEstimates st;
    st.side = Side::ue;
    st.p0 = {{1, 0}, 1};
    st.p1 = {{2, 0}, 1};
    CHECK_THROWS_AS(recover_csi(st, ScenarioTag::opt1), std::invalid_argument);
    st.side = Side::bs;
    CHECK_NOTHROW(recover_csi(st, ScenarioTag::opt1));
    CsiResult none;
    CHECK_THROWS_AS(bs_derive_dl(none, RisPanel{}), std::invalid_argument);
}

TEST_CASE("scenario tags follow Eve's activity at the pilots") {
    const SlotPlan slot = default_slot_plan(22);
    std::vector<bool> off(22, false), on(22, true);
    CHECK(infer_scenario_tag(slot, off) == ScenarioTag::opt1);
    CHECK(infer_scenario_tag(slot, on) == ScenarioTag::opt2);
    std::vector<bool> mirror = on;
    for (int n : slot.dl_p0) mirror[n] = false;
    for (int n : slot.ul_p0) mirror[n] = false;
    CHECK(infer_scenario_tag(slot, mirror) == ScenarioTag::polluted);
    std::vector<bool> partial = off;
    partial[slot.dl_p2[0]] = true;
    CHECK(infer_scenario_tag(slot, partial) == ScenarioTag::undetermined);
    // activity off the pilots does not matter
    std::vector<bool> data_only = off;
    for (int n : slot.dl_data) data_only[n] = true;
    CHECK(infer_scenario_tag(slot, data_only) == ScenarioTag::opt1);
    CHECK_THROWS(infer_scenario_tag(slot, std::vector<bool>(5, false)));
    CHECK(to_string(ScenarioTag::polluted) == "polluted");
}

TEST_CASE("undetermined estimates are not trusted") {
    StageEstimates st;
    st.side = Side::bs;
    st.p0 = {{1, 0}, 1};
    st.p1 = {{2, 0}, 1};
    CHECK_FALSE(recover_csi(st, ScenarioTag::undetermined).trusted());
    CHECK(recover_csi(st, ScenarioTag::opt2).trusted());
}

TEST_CASE("pollution detection threshold and backoff range") {
    CHECK(detect_pollution(0.25, 0.1));
    CHECK_FALSE(detect_pollution(0.1, 0.1));
    CHECK_THROWS_AS(detect_pollution(1.5, 0.1), ValidationError);
    CHECK_THROWS_AS(detect_pollution(NAN, 0.1), ValidationError);
    RandomStream rng(6);
    bool saw_low = false, saw_high = false;
    for (int i = 0; i < 1000; ++i) {
        const int b = backoff_and_restart(rng, 5);
        CHECK(b >= 1);
        CHECK(b <= 5);
        saw_low = saw_low || b == 1;
        saw_high = saw_high || b == 5;
    }
    CHECK(saw_low);
    CHECK(saw_high);
    CHECK_THROWS_AS(backoff_and_restart(rng, 0), ValidationError);
}
