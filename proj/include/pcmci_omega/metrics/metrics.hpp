#pragma once

#include "pcmci_omega/core/periodic_graph.hpp"
#include "pcmci_omega/sim/scm_spec.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace pcmci_omega {

/**
 * Phase-resolved lagged adjacency, shape [n, period, n, max_lag + 1].
 *
 * Entry (j, k, i, lag) marks X^i_{t-lag} -> X^j_t for t in phase k. Phase
 * indices only make sense relative to the anchor the array was built with.
 * The lag-0 slice is kept for shape parity and is always false.
 */
class EdgeArray4D {
public:
    EdgeArray4D() = default;
    EdgeArray4D(std::size_t n, int period, int max_lag);

    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] int period() const { return period_; }
    [[nodiscard]] int max_lag() const { return max_lag_; }

    [[nodiscard]] bool get(std::size_t j, int k, std::size_t i, int lag) const { return data_[offset(j, k, i, lag)] != 0; }
    void set(std::size_t j, int k, std::size_t i, int lag, bool value = true);
    [[nodiscard]] const std::vector<std::uint8_t>& data() const { return data_; }

    bool operator==(const EdgeArray4D&) const = default;

private:
    [[nodiscard]] std::size_t offset(std::size_t j, int k, std::size_t i, int lag) const {
        return ((j * static_cast<std::size_t>(period_) + static_cast<std::size_t>(k)) * n_ + i) *
                   static_cast<std::size_t>(max_lag_ + 1) +
               static_cast<std::size_t>(lag);
    }

    std::size_t n_ = 0;
    int period_ = 1;
    int max_lag_ = 0;
    std::vector<std::uint8_t> data_;
};

// Phase k of the array covers times anchor + k (mod period); period must be a multiple of every omega.
[[nodiscard]] EdgeArray4D to_edge_array(const PeriodicGraph& graph, int period, int max_lag, int anchor);

// Inverse of to_edge_array; each variable gets the smallest periodicity its slices repeat with.
[[nodiscard]] PeriodicGraph from_edge_array(const EdgeArray4D& array, int anchor);

[[nodiscard]] EdgeArray4D true_edge_array(const ScmSpec& spec, int period);

/// Tiles both arrays to the common period and pads lags to the larger max lag.
[[nodiscard]] std::pair<EdgeArray4D, EdgeArray4D> lcm_align(const EdgeArray4D& truth, const EdgeArray4D& est);

struct AdjacencyScores {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

[[nodiscard]] AdjacencyScores scores_from_counts(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn);

/// Entrywise counts over aligned arrays of equal shape, lag 0 excluded.
[[nodiscard]] AdjacencyScores adjacency_metrics(const EdgeArray4D& truth, const EdgeArray4D& est);

[[nodiscard]] bool omega_accuracy(int true_omega, int est_omega, int omega_ub);

/**
 * Same counts as aligning the two graphs' edge arrays, without materializing them.
 *
 * Both graphs are compared on the truth's anchor. Each variable contributes its
 * counts over lcm(omega, estimated omega) phases, scaled to the full common period.
 */
[[nodiscard]] AdjacencyScores evaluate_graph(const PeriodicGraph& truth, const PeriodicGraph& est);

// Share of variables whose estimated periodicity is a multiple of the truth within omega_ub.
[[nodiscard]] double omega_accuracy_rate(const std::vector<int>& truth, const std::vector<int>& est, int omega_ub);

}  // namespace pcmci_omega
