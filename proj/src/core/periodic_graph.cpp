#include "pcmci_omega/core/periodic_graph.hpp"

#include "pcmci_omega/core/periods.hpp"
#include "pcmci_omega/errors.hpp"

#include <algorithm>

namespace pcmci_omega {

LinkSet SeriesEntry::links(int phase_index) const {
    LinkSet out;
    out.reserve(phases.at(phase_index).size());
    for (const auto& p : phases[phase_index]) {
        out.push_back(p.link);
    }
    return out;
}

void PeriodicGraph::validate() const {
    if (series.size() != n) {
        throw UsageError("periodic graph: series count does not match n");
    }
    if (!names.empty() && names.size() != n) {
        throw UsageError("periodic graph: names count does not match n");
    }
    for (std::size_t j = 0; j < n; ++j) {
        const auto& s = series[j];
        if (s.omega < 1 || static_cast<int>(s.phases.size()) != s.omega) {
            throw UsageError("periodic graph: variable " + std::to_string(j) +
                             " has omega " + std::to_string(s.omega) + " but " +
                             std::to_string(s.phases.size()) + " phases");
        }
        for (const auto& phase : s.phases) {
            for (std::size_t a = 0; a < phase.size(); ++a) {
                const auto& l = phase[a].link;
                if (l.var < 0 || static_cast<std::size_t>(l.var) >= n || l.lag < 1 ||
                    l.lag > tau_max) {
                    throw UsageError("periodic graph: link " + to_string(l) +
                                     " out of range for variable " + std::to_string(j));
                }
                if (a > 0 && !(phase[a - 1].link < l)) {
                    throw UsageError("periodic graph: unsorted or duplicate parents");
                }
            }
        }
    }
}

PeriodicGraph PeriodicGraph::rebased(int new_anchor) const {
    PeriodicGraph out = *this;
    out.anchor = new_anchor;
    for (std::size_t j = 0; j < n; ++j) {
        const int w = series[j].omega;
        for (int k = 0; k < w; ++k) {
            // Phase k+1 under the new anchor covers times new_anchor + k (+ m*w).
            const int old_phase = wrapped_phase(new_anchor + k, w, anchor);
            out.series[j].phases[k] = series[j].phases[old_phase - 1];
        }
    }
    return out;
}

LinkSet PeriodicGraph::parents_at(std::size_t j, int t) const {
    const auto& s = series.at(j);
    return s.links(wrapped_phase(t, s.omega, anchor) - 1);
}

std::vector<int> PeriodicGraph::omegas() const {
    std::vector<int> out;
    out.reserve(n);
    for (const auto& s : series) {
        out.push_back(s.omega);
    }
    return out;
}

bool same_structure(const PeriodicGraph& a, const PeriodicGraph& b) {
    if (a.n != b.n) {
        return false;
    }
    const PeriodicGraph rb = b.rebased(a.anchor);
    for (std::size_t j = 0; j < a.n; ++j) {
        if (a.series[j].omega != rb.series[j].omega) {
            return false;
        }
        for (int k = 0; k < a.series[j].omega; ++k) {
            if (a.series[j].links(k) != rb.series[j].links(k)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace pcmci_omega
