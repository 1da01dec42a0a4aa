#pragma once

#include <span>
#include <vector>

namespace pcmci_omega {

/// Least common multiple of per-variable periodicities (the joint period).
[[nodiscard]] int lcm_periodicities(std::span<const int> omegas);

/// Smallest multiple of `period` that is >= tau_max + 1.
[[nodiscard]] int chain_count(int tau_max, int period);

/**
 * Phase-indexed sample sets for one periodicity guess.
 *
 * subsets[k-1] holds start+(k-1), start+(k-1)+omega, ... up to T, so phase 1
 * always begins at `start`.
 */
struct TimePartition {
    int omega = 1;
    int start = 1;
    int T = 1;
    std::vector<std::vector<int>> subsets;
};

[[nodiscard]] TimePartition build_partition(int omega, int start, int T);

/// 1-based phase of time t, counted from `start`.
[[nodiscard]] int phase_of(int t, int omega, int start);

// Same as phase_of but accepts t < start by wrapping backwards.
[[nodiscard]] int wrapped_phase(int t, int omega, int anchor);

}  // namespace pcmci_omega
