#include "pcmci_omega/sim/unrolled_dag.hpp"

#include "pcmci_omega/errors.hpp"
#include "pcmci_omega/sim/scm_spec.hpp"

#include <algorithm>

namespace pcmci_omega {

UnrolledDag::UnrolledDag(std::size_t n, int horizon)
    : n_(n), horizon_(horizon),
      parents_(n * static_cast<std::size_t>(std::max(horizon, 0))),
      children_(parents_.size()) {
    if (n == 0 || horizon < 1) {
        throw UsageError("UnrolledDag: need n >= 1 and horizon >= 1");
    }
}

std::size_t UnrolledDag::index(const DagNode& node) const {
    if (!contains(node)) {
        throw UsageError("UnrolledDag: node (" + std::to_string(node.var) + "," +
                         std::to_string(node.t) + ") outside the DAG");
    }
    return static_cast<std::size_t>(node.t - 1) * n_ + static_cast<std::size_t>(node.var);
}

DagNode UnrolledDag::node(std::size_t index) const {
    return {static_cast<int>(index % n_), static_cast<int>(index / n_) + 1};
}

bool UnrolledDag::contains(const DagNode& node) const {
    return node.var >= 0 && static_cast<std::size_t>(node.var) < n_ && node.t >= 1 &&
           node.t <= horizon_;
}

void UnrolledDag::add_edge(const DagNode& from, const DagNode& to) {
    if (from.t >= to.t) {
        throw UsageError("UnrolledDag: edges must point forward in time");
    }
    const auto a = index(from);
    const auto b = index(to);
    parents_[b].push_back(a);
    children_[a].push_back(b);
}

std::size_t UnrolledDag::edge_count() const {
    std::size_t total = 0;
    for (const auto& p : parents_) {
        total += p.size();
    }
    return total;
}

UnrolledDag unroll(const ScmSpec& spec, int horizon) {
    if (horizon < spec.tau_max + 1) {
        throw UsageError("unroll: horizon must be at least tau_max + 1");
    }
    UnrolledDag dag(static_cast<std::size_t>(spec.n), horizon);
    std::vector<std::vector<LinkSet>> links(spec.n);
    for (int j = 0; j < spec.n; ++j) {
        for (int k = 0; k < spec.omegas[j]; ++k) {
            links[j].push_back(spec.phase_links(j, k));
        }
    }
    for (int t = spec.tau_max + 1; t <= horizon; ++t) {
        for (int j = 0; j < spec.n; ++j) {
            for (const auto& l : links[j][spec.phase_at(j, t)]) {
                dag.add_edge({l.var, t - l.lag}, {j, t});
            }
        }
    }
    return dag;
}

}  // namespace pcmci_omega
