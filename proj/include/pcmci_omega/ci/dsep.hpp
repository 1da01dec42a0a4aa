#pragma once

#include "pcmci_omega/ci/ci_test.hpp"
#include "pcmci_omega/sim/unrolled_dag.hpp"

#include <span>

namespace pcmci_omega {

/// Reachability-based d-separation (ancestor marking plus directed ball traversal).
[[nodiscard]] bool d_separated(const UnrolledDag& dag, std::size_t x, std::size_t y,
                               std::span<const std::size_t> z);

/// Exact CI answer: p = 1, statistic = 0 when x and y are d-separated given z; p = 0, statistic = 1 otherwise.
[[nodiscard]] CiResult dsep_oracle_test(const UnrolledDag& dag, const DagNode& x,
                                        const DagNode& y, std::span<const DagNode> z);

}  // namespace pcmci_omega
