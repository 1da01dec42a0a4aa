#include "pcmci_omega/pcmci/fdr.hpp"

#include "pcmci_omega/errors.hpp"

#include <algorithm>
#include <numeric>

namespace pcmci_omega {

std::vector<double> fdr_adjust(std::span<const double> pvalues) {
    const std::size_t m = pvalues.size();
    for (double p : pvalues) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw UsageError("fdr_adjust: p-values must lie in [0, 1]");
        }
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pvalues[a] < pvalues[b]; });

    std::vector<double> adjusted(m);
    double running = 1.0;
    for (std::size_t r = m; r-- > 0;) {
        const double scaled = pvalues[order[r]] * static_cast<double>(m) / static_cast<double>(r + 1);
        running = std::min(running, scaled);
        adjusted[order[r]] = std::min(running, 1.0);
    }
    return adjusted;
}

}  // namespace pcmci_omega
