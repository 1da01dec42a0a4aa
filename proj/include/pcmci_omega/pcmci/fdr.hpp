#pragma once

#include <span>
#include <vector>

namespace pcmci_omega {

/// Benjamini-Hochberg step-up adjusted p-values, monotone and clipped to 1, in input order.
[[nodiscard]] std::vector<double> fdr_adjust(std::span<const double> pvalues);

}  // namespace pcmci_omega
