#include <doctest.h>

#include <cmath>

#include "dris/adversary.hpp"
#include "dris/random.hpp"

using namespace dris;

namespace {
AdversaryTiming timing(int n_r, int n_n, int n_np, AdversaryMode mode = AdversaryMode::eavesdrop) {
    AdversaryTiming t;
    t.n_r = n_r;
    t.n_n = n_n;
    t.n_n_prime = n_np;
    t.mode = mode;
    return t;
}
}  // namespace

TEST_CASE("non-reciprocal timers gate precoder then combiner knowledge") {
    EveState s = make_eve_state(timing(3, 5, 8), false);
    CHECK_FALSE(s.knows_precoders);
    s = advance(s, 4);
    CHECK_FALSE(s.knows_precoders);
    s = advance(s, 1);
    CHECK(s.knows_precoders);
    CHECK_FALSE(s.knows_combiners);
    s = advance(s, 3);
    CHECK(s.knows_combiners);
    s = reset_epoch(s);
    CHECK(s.elapsed == 0);
    CHECK_FALSE(s.knows_precoders);
    CHECK_FALSE(s.knows_combiners);
    CHECK_THROWS_AS(advance(s, -1), ValidationError);
}

TEST_CASE("reciprocal timer reveals precoder and combiner together") {
    EveState s = make_eve_state(timing(3, 5, 8), true);
    s = advance(s, 2);
    CHECK_FALSE(s.knows_precoders);
    s = advance(s, 1);
    CHECK(s.knows_precoders);
    CHECK(s.knows_combiners);
}

TEST_CASE("zero timers mean Eve knows everything from the start") {
    const EveState s = make_eve_state(timing(0, 0, 0), false);
    CHECK(s.knows_precoders);
    CHECK(s.knows_combiners);
}

TEST_CASE("timer monotonicity: knowledge never disappears within an epoch") {
    EveState s = make_eve_state(timing(4, 7, 12), false);
    bool had_p = false, had_c = false;
    for (int i = 0; i < 30; ++i) {
        s = advance(s, 1);
        CHECK((!had_p || s.knows_precoders));
        CHECK((!had_c || s.knows_combiners));
        CHECK((!s.knows_combiners || s.knows_precoders));
        had_p = s.knows_precoders;
        had_c = s.knows_combiners;
    }
}

TEST_CASE("eavesdropping decision with and without the precoder") {
    RandomStream rng(4);
    const Complex h{0.3, -1.1};
    const Complex v{-2.0, 0.7};
    for (int i = 0; i < 4; ++i) {
        const auto x = symbol_from_index(i, Constellation::qpsk);
        const Complex y = eavesdrop(v * x.value, h, 0.0, rng);
        CHECK(std::abs(y - h * v * x.value) < 1e-15);
        CHECK(eve_decide(y, h, v, Constellation::qpsk).index == i);
    }
    // a precoder rotating by pi maps every QPSK point to its opposite
    const auto x = symbol_from_index(0, Constellation::qpsk);
    const Complex y = eavesdrop(-1.0 * x.value, h, 0.0, rng);
    CHECK(eve_decide(y, h, std::nullopt, Constellation::qpsk).index == 3);
}

TEST_CASE("injection is rotated only once combiners are known") {
    const auto fake = symbol_from_index(1, Constellation::qpsk);
    const Complex h_e{0.0, 2.0};
    EveState blind = make_eve_state(timing(1, 5, 5, AdversaryMode::inject), false);
    const Complex a = inject(fake, h_e, blind, 1.0);
    CHECK(std::abs(a - 4.0 * fake.value) < 1e-12);
    EveState aware = advance(blind, 5);
    const Complex b = inject(fake, h_e, aware, 1.0);
    CHECK(std::abs(b - 4.0 * fake.value * unit_phasor(1.0)) < 1e-12);
    // after the receiver de-rotates, an aware fake arrives unrotated
    CHECK(std::abs(unit_phasor(-1.0) * b - 4.0 * fake.value) < 1e-12);
}

TEST_CASE("pollution activation mirrors the D-RIS") {
    const EveState pol = make_eve_state(timing(11, 22, 22, AdversaryMode::pollute_cep), false);
    const ActivationPlan p = pollute_cep(pol, 1);
    CHECK(p.mirrors_dris);
    CHECK(p.eve_active_from == 1);
    AdversaryTiming t = timing(11, 22, 22, AdversaryMode::eavesdrop);
    t.activation_symbol = 6;
    const ActivationPlan q = pollute_cep(make_eve_state(t, false), 1);
    CHECK_FALSE(q.mirrors_dris);
    CHECK(q.eve_active_from == 6);
}

TEST_CASE("invalid timings are rejected") {
    CHECK_THROWS_AS(make_eve_state(timing(1, 5, 3), false), ValidationError);
}
