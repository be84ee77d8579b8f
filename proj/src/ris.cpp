// SPDX-License-Identifier: Apache-2.0
#include "dris/ris.hpp"

#include <stdexcept>

namespace dris {

void RisPanel::validate() const {
    if (m < 1) throw ValidationError("ris.m", "element count must be at least 1");
    if (static_cast<int>(static_phases.size()) != m) {
        throw ValidationError("ris.static_phases", "length must equal the element count");
    }
    for (double p : static_phases) {
        if (!(p >= 0.0 && p < kTwoPi)) {
            throw ValidationError("ris.static_phases", "phases must lie in [0, 2pi)");
        }
    }
    if (active_from < 0) throw ValidationError("ris.active_from", "must be non-negative");
}

std::vector<double> align_static_phases(const std::vector<Complex>& q, const std::vector<Complex>& g) {
    if (q.size() != g.size()) {
        throw std::invalid_argument("align_static_phases: leg lengths differ");
    }
    std::vector<double> out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        out[i] = wrap_phase(-std::arg(q[i] * g[i]));
    }
    return out;
}

std::vector<double> random_static_phases(int m, RandomStream& rng) {
    if (m < 1) throw ValidationError("m", "element count must be at least 1");
    std::vector<double> out(static_cast<std::size_t>(m));
    for (auto& p : out) p = rng.uniform_phase();
    return out;
}

double PhaseSchedule::at(int n) const {
    if (n < 0 || n >= static_cast<int>(phase.size())) {
        throw std::out_of_range("symbol " + std::to_string(n) + " is not part of the schedule");
    }
    return phase[static_cast<std::size_t>(n)];
}

PhaseSchedule schedule_phases(const RisPanel& panel, const SlotPlan& slot, bool flip) {
    PhaseSchedule s;
    s.flip_enabled = flip;
    s.phase.resize(static_cast<std::size_t>(slot.n_total));
    for (int n = 0; n < slot.n_total; ++n) {
        const SymbolRole role = slot.role(n);
        double phi = slot.is_dl(n) ? panel.phi_dl : panel.phi_ul;
        if (flip && role == SymbolRole::dl_p2) phi = panel.phi_ul;
        s.phase[static_cast<std::size_t>(n)] = phi;
    }
    return s;
}

bool panel_on(const RisPanel& panel, const SlotPlan& slot, int n, bool dark_at_p0) {
    if (n < panel.active_from) return false;
    if (dark_at_p0) {
        const SymbolRole r = slot.role(n);
        if (r == SymbolRole::dl_p0 || r == SymbolRole::ul_p0) return false;
    }
    return true;
}

Complex rotate_csi(Complex h_ul, double phi_dl, double phi_ul) {
    return h_ul * unit_phasor(phi_dl - phi_ul);
}

}  // namespace dris
