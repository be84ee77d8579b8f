// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "dris/common.hpp"
#include "dris/phy.hpp"
#include "dris/random.hpp"
#include "dris/ris.hpp"
#include "dris/scenario.hpp"

namespace dris {

enum class ScenarioTag { opt1, opt2, polluted, undetermined };
enum class Side { ue, bs };

std::string to_string(ScenarioTag tag);

Complex ls_estimate(Complex y, const ConstellationSymbol& pilot);

struct Stage {
    Complex mean;
    int count = 0;
};

/// UE side holds the DL p0/p1/p2 stages, BS side the UL p0/p1 stages (p2 empty).
struct StageEstimates {
    Side side = Side::ue;
    Stage p0;
    Stage p1;
    Stage p2;
};

/// Averages the per-symbol LS estimates of each stage. Throws if a pilot
/// index of the slot has no received sample.
StageEstimates collect_stages(const std::vector<ReceivedSample>& received, const SlotPlan& slot, Side side,
                              const ConstellationSymbol& pilot);

struct CsiResult {
    std::optional<Complex> h_a_dl_hat;
    std::optional<Complex> h_a_ul_hat;
    Complex h_d_hat;  // p0 stage; includes Eve's reflection when she was present
    std::optional<Complex> h_e_hat;
    ScenarioTag scenario_tag = ScenarioTag::undetermined;
    bool polluted = false;

    bool trusted() const { return !polluted; }
};

/// Stage differences against p0. The arithmetic is the same for every tag;
/// the tag only decides whether the D-RIS estimates can be trusted.
CsiResult recover_csi(const StageEstimates& stages, ScenarioTag tag);

/// BS-side DL estimate from its own UL estimate and the panel phases.
CsiResult bs_derive_dl(CsiResult result, const RisPanel& panel);

/// Tags one slot from Eve's on/off state at each symbol.
ScenarioTag infer_scenario_tag(const SlotPlan& slot, const std::vector<bool>& eve_on);

bool detect_pollution(double validation_ser, double threshold);
int backoff_and_restart(RandomStream& rng, int max_backoff);

}  // namespace dris
