#pragma once

#include <compare>
#include <string>
#include <vector>

namespace pcmci_omega {

/// A lagged parent candidate X^var_{t-lag}. Variables are 0-based, lags >= 1.
struct LaggedLink {
    int var = 0;
    int lag = 1;

    auto operator<=>(const LaggedLink&) const = default;

    /// The same link seen from a node that is itself `shift` steps in the past.
    [[nodiscard]] LaggedLink shifted(int shift) const { return {var, lag + shift}; }
};

using LinkSet = std::vector<LaggedLink>;

[[nodiscard]] std::string to_string(const LaggedLink& link);

// Sorts and removes duplicates in place.
void normalize(LinkSet& links);

[[nodiscard]] bool contains(const LinkSet& sorted_links, const LaggedLink& link);

[[nodiscard]] bool is_subset(const LinkSet& sorted_sub, const LinkSet& sorted_super);

}  // namespace pcmci_omega
