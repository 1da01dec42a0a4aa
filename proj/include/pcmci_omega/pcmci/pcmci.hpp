#pragma once

#include "pcmci_omega/ci/ci_test.hpp"
#include "pcmci_omega/core/periodic_graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pcmci_omega {

struct PcmciConfig {
    int tau_ub = 1;
    double alpha_pc = 0.05;
    double alpha_mci = 0.05;
    int p_max = -1;  // -1: n * tau_ub
    int q_max = 1;
    int p_x = -1;    // -1: every ranked parent of the source
    bool fdr = false;
    int start = -1;  // first sample time; -1: 2 * tau_ub
    int workers = 1;
    // Nonzero: visit candidates within each PC1 round in a shuffled order.
    std::uint64_t visit_shuffle_seed = 0;

    [[nodiscard]] int sample_start() const { return start > 0 ? start : 2 * tau_ub; }
};

struct RankedParent {
    LaggedLink link;
    double min_stat = 0.0;  // smallest |statistic| seen over all PC1 tests
    bool flagged = false;   // kept only because a test lacked samples
};

/// PC1 survivors per variable, ranked by min_stat (largest first).
struct SupersetParents {
    std::vector<std::vector<RankedParent>> per_var;

    [[nodiscard]] LinkSet links(std::size_t j) const;  // sorted by link
};

/// Condition selection for one target variable.
[[nodiscard]] std::vector<RankedParent> pc1(const CiTest& test, std::size_t n, std::size_t j,
                                            int tau_ub, double alpha_pc, int p_max, int q_max,
                                            std::span<const int> sample_times,
                                            std::uint64_t visit_shuffle_seed = 0);

struct MciResult {
    std::size_t n = 0;
    int tau_ub = 0;
    // Flat [j][i][lag-1].
    std::vector<double> pvalues;
    std::vector<double> adjusted;  // equals pvalues unless FDR was applied
    std::vector<double> statistics;
    std::vector<char> insufficient;

    [[nodiscard]] std::size_t slot(std::size_t j, std::size_t i, int lag) const {
        return (j * n + i) * static_cast<std::size_t>(tau_ub) + static_cast<std::size_t>(lag - 1);
    }
    [[nodiscard]] double pvalue(std::size_t j, std::size_t i, int lag) const {
        return adjusted[slot(j, i, lag)];
    }
};

/// MCI tests for every lagged pair; p_x < 0 conditions on the full ranked source list.
[[nodiscard]] MciResult mci(const CiTest& test, std::size_t n, const SupersetParents& supersets,
                            int tau_ub, int p_x, std::span<const int> sample_times,
                            int workers = 1);

// Replaces MciResult::adjusted with Benjamini-Hochberg values.
void apply_fdr(MciResult& result);

struct PcmciResult {
    SupersetParents supersets;
    MciResult mci;
    PeriodicGraph graph;  // single-phase window graph of links with p <= alpha_mci
};

[[nodiscard]] PeriodicGraph window_graph(const MciResult& result, double alpha_mci,
                                         std::vector<std::string> names, int anchor);

[[nodiscard]] SupersetParents run_pc1_all(const CiTest& test, std::size_t n,
                                          const PcmciConfig& config, std::span<const int> sample_times);

[[nodiscard]] PcmciResult run_pcmci(const TimeSeriesPanel& panel, const CiTest& test,
                                    const PcmciConfig& config);

[[nodiscard]] std::vector<int> sample_range(int start, int T);

}  // namespace pcmci_omega
