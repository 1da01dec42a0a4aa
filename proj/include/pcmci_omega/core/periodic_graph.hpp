#pragma once

#include "pcmci_omega/core/lagged_link.hpp"

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace pcmci_omega {

struct ParentLink {
    LaggedLink link;
    double pvalue = std::numeric_limits<double>::quiet_NaN();
};

struct SeriesEntry {
    int omega = 1;
    // phases[k] are the parents of X^j_t for t in phase k+1; each sorted by link.
    std::vector<std::vector<ParentLink>> phases;

    [[nodiscard]] LinkSet links(int phase_index) const;
};

/**
 * Periodic lagged causal graph: per variable a periodicity and one parent set per phase.
 *
 * `anchor` is the time index at which phase 1 of every variable starts. Ground
 * truth from the simulator is anchored at tau_max + 1, discovery output at the
 * first sample time of the phase scan.
 */
struct PeriodicGraph {
    std::size_t n = 0;
    int tau_max = 0;
    int anchor = 1;
    std::vector<std::string> names;
    std::vector<SeriesEntry> series;

    // Checks omega >= 1, phase count, lag range and sorted unique parent lists.
    void validate() const;

    // Equivalent graph whose phase 1 starts at `new_anchor`.
    [[nodiscard]] PeriodicGraph rebased(int new_anchor) const;

    // Parent links active at time t for variable j.
    [[nodiscard]] LinkSet parents_at(std::size_t j, int t) const;

    [[nodiscard]] std::vector<int> omegas() const;
};

// Same omegas and the same link sets per phase once both share an anchor (p-values ignored).
[[nodiscard]] bool same_structure(const PeriodicGraph& a, const PeriodicGraph& b);

}  // namespace pcmci_omega
