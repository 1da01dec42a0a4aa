#include "pcmci_omega/core/periods.hpp"

#include "pcmci_omega/errors.hpp"

#include <limits>
#include <numeric>
#include <string>

namespace pcmci_omega {

int lcm_periodicities(std::span<const int> omegas) {
    if (omegas.empty()) {
        throw UsageError("lcm_periodicities: empty periodicity list");
    }
    long long acc = 1;
    for (int w : omegas) {
        if (w < 1) {
            throw UsageError("lcm_periodicities: periodicity must be >= 1, got " +
                             std::to_string(w));
        }
        acc = std::lcm(acc, static_cast<long long>(w));
        if (acc > std::numeric_limits<int>::max()) {
            throw UsageError("lcm_periodicities: joint period overflows int");
        }
    }
    return static_cast<int>(acc);
}

int chain_count(int tau_max, int period) {
    if (tau_max < 0 || period < 1) {
        throw UsageError("chain_count: need tau_max >= 0 and period >= 1");
    }
    const int blocks = (tau_max + 1 + period - 1) / period;
    return blocks * period;
}

TimePartition build_partition(int omega, int start, int T) {
    if (omega < 1) {
        throw UsageError("build_partition: omega must be >= 1");
    }
    if (start < 1 || start > T) {
        throw UsageError("build_partition: start " + std::to_string(start) +
                         " outside [1, " + std::to_string(T) + "]");
    }
    if (T - start + 1 < omega) {
        throw InsufficientDataError("build_partition: omega=" + std::to_string(omega) +
                                    " leaves an empty phase (only " +
                                    std::to_string(T - start + 1) + " usable timesteps)");
    }
    TimePartition part{omega, start, T, std::vector<std::vector<int>>(omega)};
    for (int k = 0; k < omega; ++k) {
        auto& subset = part.subsets[k];
        subset.reserve((T - start - k) / omega + 1);
        for (int t = start + k; t <= T; t += omega) {
            subset.push_back(t);
        }
    }
    return part;
}

int phase_of(int t, int omega, int start) {
    if (omega < 1) {
        throw UsageError("phase_of: omega must be >= 1");
    }
    if (t < start) {
        throw UsageError("phase_of: t=" + std::to_string(t) + " precedes anchor " +
                         std::to_string(start));
    }
    return (t - start) % omega + 1;
}

int wrapped_phase(int t, int omega, int anchor) {
    const int r = (t - anchor) % omega;
    return (r < 0 ? r + omega : r) + 1;
}

}  // namespace pcmci_omega
