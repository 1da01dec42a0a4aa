#pragma once

#include <cstddef>
#include <vector>

namespace pcmci_omega {

struct ScmSpec;

struct DagNode {
    int var = 0;  // 0-based
    int t = 1;    // 1-based

    auto operator<=>(const DagNode&) const = default;
};

/**
 * Time-unrolled DAG of a periodic SCM over t in [1, horizon].
 *
 * Node (j, t) has index (t-1)*n + j. Every edge points strictly forward in time.
 */
class UnrolledDag {
public:
    UnrolledDag(std::size_t n, int horizon);

    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] int horizon() const { return horizon_; }
    [[nodiscard]] std::size_t node_count() const { return parents_.size(); }

    [[nodiscard]] std::size_t index(const DagNode& node) const;
    [[nodiscard]] DagNode node(std::size_t index) const;
    [[nodiscard]] bool contains(const DagNode& node) const;

    void add_edge(const DagNode& from, const DagNode& to);

    [[nodiscard]] const std::vector<std::size_t>& parents(std::size_t index) const {
        return parents_[index];
    }
    [[nodiscard]] const std::vector<std::size_t>& children(std::size_t index) const {
        return children_[index];
    }
    [[nodiscard]] std::size_t edge_count() const;

private:
    std::size_t n_;
    int horizon_;
    std::vector<std::vector<std::size_t>> parents_;
    std::vector<std::vector<std::size_t>> children_;
};

/// Unrolls the spec's phase edge matrices into a DAG; nodes with t <= tau_max have no parents.
[[nodiscard]] UnrolledDag unroll(const ScmSpec& spec, int horizon);

}  // namespace pcmci_omega
