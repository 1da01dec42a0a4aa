#pragma once

#include "pcmci_omega/pcmci/pcmci.hpp"

#include <string>
#include <vector>

namespace pcmci_omega {

struct OmegaGuess {
    int omega = 1;
    bool feasible = true;
    std::string reason;  // why the guess was excluded, empty when feasible
    std::vector<std::vector<ParentLink>> phases;
    int max_size = 0;  // largest phase parent set
    int total_size = 0;  // summed over phases

    [[nodiscard]] double mean_size() const { return omega > 0 ? static_cast<double>(total_size) / omega : 0.0; }
};

struct OmegaScan {
    // per_var[j][omega - 1]
    std::vector<std::vector<OmegaGuess>> per_var;
    std::vector<int> selected;

    [[nodiscard]] std::vector<int> sizes(std::size_t j) const;
    [[nodiscard]] std::vector<char> feasible(std::size_t j) const;
    [[nodiscard]] std::vector<double> mean_sizes(std::size_t j) const;
};

struct DiscoverConfig {
    PcmciConfig pcmci;
    int omega_ub = 1;
    bool turning_point = true;
};

struct DiscoverResult {
    PeriodicGraph graph;  // anchored at the first sample time
    OmegaScan scan;
    PcmciResult pcmci;
    SupersetParents superset;  // PCMCI output the phase scan starts from
};

/// Links of the PCMCI window graph per variable, ranked by |MCI statistic| (largest first).
[[nodiscard]] SupersetParents graph_supersets(const PcmciResult& result);

/**
 * Parent sets of X^j for each phase of one periodicity guess.
 *
 * Every candidate in the superset of j is tested on the samples of one phase,
 * conditioned on the superset of j joined with the superset of its own source
 * shifted by the candidate's lag. Throws InsufficientDataError when a phase is
 * too short for some test.
 */
[[nodiscard]] std::vector<std::vector<ParentLink>> phase_parent_sets(
    const CiTest& test, std::size_t j, int omega, const SupersetParents& supersets,
    double alpha_mci, int start, int T);

/**
 * Picks the first strict turning point of `sizes` over feasible guesses, else
 * the argmin. Ties in the argmin go to the smaller `mean_sizes` entry when
 * given, then to the smallest guess.
 */
[[nodiscard]] int select_omega(std::span<const int> sizes, std::span<const char> feasible,
                               bool turning_point = true, std::span<const double> mean_sizes = {});

[[nodiscard]] DiscoverResult discover(const TimeSeriesPanel& panel, const CiTest& test,
                                      const DiscoverConfig& config);

}  // namespace pcmci_omega
