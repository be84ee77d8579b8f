// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "dris/common.hpp"
#include "dris/random.hpp"
#include "dris/scenario.hpp"

namespace dris {

/// One metasurface: per-element static phases plus the common dynamic
/// phases applied on DL and UL symbols.
struct RisPanel {
    int m = 0;
    std::vector<double> static_phases;
    double phi_dl = 0.0;
    double phi_ul = 0.0;
    int active_from = 0;

    void validate() const;
};

/// phi_m = -arg(q_m g_m), wrapped into [0, 2pi).
std::vector<double> align_static_phases(const std::vector<Complex>& q, const std::vector<Complex>& g);
std::vector<double> random_static_phases(int m, RandomStream& rng);

struct PhaseSchedule {
    std::vector<double> phase;  // indexed by symbol
    bool flip_enabled = false;

    double at(int n) const;
};

/// Without flipping every DL symbol uses phi_dl and every UL symbol phi_ul.
/// With flipping the DL p2 symbols use phi_ul instead.
PhaseSchedule schedule_phases(const RisPanel& panel, const SlotPlan& slot, bool flip);

/// On/off state of a panel at symbol n. Panels that take part in the
/// estimation procedure are dark during the p0 stages.
bool panel_on(const RisPanel& panel, const SlotPlan& slot, int n, bool dark_at_p0);

/// h_dl = h_ul * exp(j(phi_dl - phi_ul)).
Complex rotate_csi(Complex h_ul, double phi_dl, double phi_ul);

}  // namespace dris
