// SPDX-License-Identifier: Apache-2.0
#include "dris/cep.hpp"

#include <map>

namespace dris {

std::string to_string(ScenarioTag tag) {
    switch (tag) {
        case ScenarioTag::opt1: return "opt1";
        case ScenarioTag::opt2: return "opt2";
        case ScenarioTag::polluted: return "polluted";
        case ScenarioTag::undetermined: return "undetermined";
    }
    return "?";
}

Complex ls_estimate(Complex y, const ConstellationSymbol& pilot) {
    if (pilot.value == Complex{}) throw ValidationError("pilot", "zero pilot cannot be inverted");
    return y / pilot.value;
}

StageEstimates collect_stages(const std::vector<ReceivedSample>& received, const SlotPlan& slot, Side side,
                              const ConstellationSymbol& pilot) {
    std::map<int, Complex> by_index;
    for (const auto& s : received) by_index[s.n] = s.y;

    auto average = [&](const std::vector<int>& idx, const char* stage) {
        Stage st;
        for (int n : idx) {
            const auto it = by_index.find(n);
            if (it == by_index.end()) {
                throw std::invalid_argument(std::string("collect_stages: missing pilot symbol ") +
                                            std::to_string(n) + " of stage " + stage);
            }
            st.mean += ls_estimate(it->second, pilot);
            ++st.count;
        }
        if (st.count > 0) st.mean /= static_cast<double>(st.count);
        return st;
    };

    StageEstimates e;
    e.side = side;
    if (side == Side::ue) {
        e.p0 = average(slot.dl_p0, "dl_p0");
        e.p1 = average(slot.dl_p1, "dl_p1");
        e.p2 = average(slot.dl_p2, "dl_p2");
    } else {
        e.p0 = average(slot.ul_p0, "ul_p0");
        e.p1 = average(slot.ul_p1, "ul_p1");
    }
    return e;
}

CsiResult recover_csi(const StageEstimates& stages, ScenarioTag tag) {
    if (stages.p0.count == 0) throw std::invalid_argument("recover_csi: p0 stage missing");
    if (stages.p1.count == 0) throw std::invalid_argument("recover_csi: p1 stage missing");
    CsiResult r;
    r.scenario_tag = tag;
    r.polluted = tag == ScenarioTag::polluted || tag == ScenarioTag::undetermined;
    r.h_d_hat = stages.p0.mean;
    if (stages.side == Side::ue) {
        if (stages.p2.count == 0) throw std::invalid_argument("recover_csi: p2 stage missing");
        r.h_a_dl_hat = stages.p1.mean - stages.p0.mean;
        r.h_a_ul_hat = stages.p2.mean - stages.p0.mean;
    } else {
        r.h_a_ul_hat = stages.p1.mean - stages.p0.mean;
    }
    return r;
}

CsiResult bs_derive_dl(CsiResult result, const RisPanel& panel) {
    if (!result.h_a_ul_hat) throw std::invalid_argument("bs_derive_dl: UL estimate missing");
    result.h_a_dl_hat = rotate_csi(*result.h_a_ul_hat, panel.phi_dl, panel.phi_ul);
    return result;
}

ScenarioTag infer_scenario_tag(const SlotPlan& slot, const std::vector<bool>& eve_on) {
    if (static_cast<int>(eve_on.size()) != slot.n_total) {
        throw std::invalid_argument("infer_scenario_tag: activation mask length differs from slot");
    }
    auto all = [&](const std::vector<int>& idx, bool value) {
        for (int n : idx) {
            if (eve_on[static_cast<std::size_t>(n)] != value) return false;
        }
        return true;
    };
    const std::vector<const std::vector<int>*> p0 = {&slot.dl_p0, &slot.ul_p0};
    const std::vector<const std::vector<int>*> ha = {&slot.dl_p1, &slot.dl_p2, &slot.ul_p1};
    bool p0_off = true, p0_on = true, ha_off = true, ha_on = true;
    for (const auto* v : p0) {
        p0_off = p0_off && all(*v, false);
        p0_on = p0_on && all(*v, true);
    }
    for (const auto* v : ha) {
        ha_off = ha_off && all(*v, false);
        ha_on = ha_on && all(*v, true);
    }
    if (p0_off && ha_off) return ScenarioTag::opt1;
    if (p0_on && ha_on) return ScenarioTag::opt2;
    if (p0_off && ha_on) return ScenarioTag::polluted;
    return ScenarioTag::undetermined;
}

bool detect_pollution(double validation_ser, double threshold) {
    if (!(validation_ser >= 0.0 && validation_ser <= 1.0)) {
        throw ValidationError("validation_ser", "must lie in [0, 1]");
    }
    return validation_ser > threshold;
}

int backoff_and_restart(RandomStream& rng, int max_backoff) {
    if (max_backoff < 1) throw ValidationError("max_backoff", "must be at least 1");
    return rng.uniform_int(1, max_backoff);
}

}  // namespace dris
