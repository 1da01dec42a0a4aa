#include "pcmci_omega/omega/discover.hpp"

#include "pcmci_omega/core/periods.hpp"
#include "pcmci_omega/errors.hpp"
#include "pcmci_omega/util/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pcmci_omega {

std::vector<int> OmegaScan::sizes(std::size_t j) const {
    std::vector<int> out;
    for (const auto& g : per_var.at(j)) {
        out.push_back(g.max_size);
    }
    return out;
}

std::vector<char> OmegaScan::feasible(std::size_t j) const {
    std::vector<char> out;
    for (const auto& g : per_var.at(j)) {
        out.push_back(g.feasible ? 1 : 0);
    }
    return out;
}

std::vector<double> OmegaScan::mean_sizes(std::size_t j) const {
    std::vector<double> out;
    for (const auto& g : per_var.at(j)) {
        out.push_back(g.mean_size());
    }
    return out;
}

SupersetParents graph_supersets(const PcmciResult& result) {
    const auto& m = result.mci;
    SupersetParents out;
    out.per_var.resize(result.graph.n);
    for (std::size_t j = 0; j < result.graph.n; ++j) {
        for (const auto& p : result.graph.series[j].phases.front()) {
            const auto stat = std::abs(m.statistics[m.slot(j, static_cast<std::size_t>(p.link.var), p.link.lag)]);
            out.per_var[j].push_back({p.link, stat, false});
        }
        std::stable_sort(out.per_var[j].begin(), out.per_var[j].end(),
                         [](const RankedParent& l, const RankedParent& r) { return l.min_stat > r.min_stat; });
    }
    return out;
}

std::vector<std::vector<ParentLink>> phase_parent_sets(const CiTest& test, std::size_t j, int omega,
                                                       const SupersetParents& supersets,
                                                       double alpha_mci, int start, int T) {
    const auto partition = build_partition(omega, start, T);
    const LinkSet target_set = supersets.links(j);

    // Conditioning sets depend only on the candidate, not on the phase.
    std::vector<LinkSet> conditions;
    conditions.reserve(target_set.size());
    for (const auto& x : target_set) {
        LinkSet z = target_set;
        for (const auto& r : supersets.per_var.at(static_cast<std::size_t>(x.var))) {
            z.push_back(r.link.shifted(x.lag));
        }
        normalize(z);
        std::erase(z, x);
        conditions.push_back(std::move(z));
    }

    std::vector<std::vector<ParentLink>> phases(static_cast<std::size_t>(omega));
    for (int k = 0; k < omega; ++k) {
        const auto& times = partition.subsets[static_cast<std::size_t>(k)];
        for (std::size_t c = 0; c < target_set.size(); ++c) {
            const auto res = test.test({j, target_set[c], conditions[c], times});
            if (res.p_value <= alpha_mci) {
                phases[static_cast<std::size_t>(k)].push_back({target_set[c], res.p_value});
            }
        }
    }
    return phases;
}

int select_omega(std::span<const int> sizes, std::span<const char> feasible, bool turning_point,
                 std::span<const double> mean_sizes) {
    if (sizes.size() != feasible.size() || (!mean_sizes.empty() && mean_sizes.size() != sizes.size())) {
        throw UsageError("select_omega: sizes and mask differ in length");
    }
    const auto ub = static_cast<int>(sizes.size());
    auto ok = [&](int w) { return w >= 1 && w <= ub && feasible[w - 1]; };
    auto s = [&](int w) { return sizes[w - 1]; };
    if (turning_point) {
        for (int w = 2; w < ub; ++w) {
            if (ok(w) && ok(w - 1) && ok(w + 1) && s(w) < std::min(s(w - 1), s(w + 1))) {
                return w;
            }
        }
    }
    int best = 0;
    for (int w = 1; w <= ub; ++w) {
        if (!ok(w)) {
            continue;
        }
        if (best == 0 || s(w) < s(best) ||
            (s(w) == s(best) && !mean_sizes.empty() && mean_sizes[w - 1] < mean_sizes[best - 1] - 1e-12)) {
            best = w;
        }
    }
    if (best == 0) {
        throw DataError("select_omega: no feasible periodicity guess");
    }
    return best;
}

DiscoverResult discover(const TimeSeriesPanel& panel, const CiTest& test, const DiscoverConfig& config) {
    const int tau_ub = config.pcmci.tau_ub;
    if (tau_ub < 1 || config.omega_ub < 1) {
        throw UsageError("tau_ub and omega_ub must be >= 1");
    }
    const int start = config.pcmci.sample_start();
    if (panel.T() < start + config.omega_ub) {
        throw UsageError("series too short: T=" + std::to_string(panel.T()) + " but the scan needs T >= " +
                         std::to_string(start + config.omega_ub) + " for tau_ub=" + std::to_string(tau_ub) +
                         ", omega_ub=" + std::to_string(config.omega_ub));
    }
    const std::size_t n = panel.n();

    DiscoverResult out;
    out.pcmci = run_pcmci(panel, test, config.pcmci);
    out.superset = graph_supersets(out.pcmci);
    const auto& supersets = out.superset;

    auto& scan = out.scan;
    scan.per_var.assign(n, std::vector<OmegaGuess>(static_cast<std::size_t>(config.omega_ub)));
    const auto cells = n * static_cast<std::size_t>(config.omega_ub);
    parallel_for(cells, config.pcmci.workers, [&](std::size_t c) {
        const std::size_t j = c / static_cast<std::size_t>(config.omega_ub);
        const int omega = static_cast<int>(c % static_cast<std::size_t>(config.omega_ub)) + 1;
        auto& guess = scan.per_var[j][static_cast<std::size_t>(omega - 1)];
        guess.omega = omega;
        try {
            guess.phases = phase_parent_sets(test, j, omega, supersets, config.pcmci.alpha_mci, start, panel.T());
        } catch (const InsufficientDataError& e) {
            guess.feasible = false;
            guess.reason = e.what();
            return;
        }
        for (const auto& p : guess.phases) {
            guess.max_size = std::max(guess.max_size, static_cast<int>(p.size()));
            guess.total_size += static_cast<int>(p.size());
        }
    });

    for (std::size_t j = 0; j < n; ++j) {
        const LinkSet super = supersets.links(j);
        for (const auto& g : scan.per_var[j]) {
            for (const auto& phase : g.phases) {
                for (const auto& p : phase) {
                    if (!contains(super, p.link)) {
                        throw std::logic_error("phase parent outside the superset of variable " + std::to_string(j));
                    }
                }
            }
        }
    }

    scan.selected.resize(n);
    out.graph.n = n;
    out.graph.tau_max = tau_ub;
    out.graph.anchor = start;
    out.graph.names = panel.names();
    out.graph.series.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto sizes = scan.sizes(j);
        const auto mask = scan.feasible(j);
        const auto means = scan.mean_sizes(j);
        const int w = select_omega(sizes, mask, config.turning_point, means);
        scan.selected[j] = w;
        out.graph.series[j].omega = w;
        out.graph.series[j].phases = scan.per_var[j][static_cast<std::size_t>(w - 1)].phases;
    }
    out.graph.validate();
    return out;
}

}  // namespace pcmci_omega
