#include "pcmci_omega/ci/dsep.hpp"

#include "pcmci_omega/errors.hpp"

#include <vector>

namespace pcmci_omega {

bool d_separated(const UnrolledDag& dag, std::size_t x, std::size_t y,
                 std::span<const std::size_t> z) {
    const std::size_t count = dag.node_count();
    if (x >= count || y >= count) {
        throw UsageError("d_separated: node index out of range");
    }
    std::vector<char> in_z(count, 0);
    for (std::size_t v : z) {
        if (v >= count) {
            throw UsageError("d_separated: conditioning node out of range");
        }
        in_z[v] = 1;
    }
    if (in_z[x] || in_z[y]) {
        return true;
    }

    // Ancestors of z (inclusive): colliders among them are open.
    std::vector<char> z_ancestor(count, 0);
    std::vector<std::size_t> stack(z.begin(), z.end());
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        if (z_ancestor[v]) {
            continue;
        }
        z_ancestor[v] = 1;
        for (std::size_t p : dag.parents(v)) {
            stack.push_back(p);
        }
    }

    // State: node plus whether we arrived from a child (up) or from a parent (down).
    enum : int { kUp = 0, kDown = 1 };
    std::vector<char> visited(2 * count, 0);
    std::vector<std::pair<std::size_t, int>> frontier{{x, kUp}};
    while (!frontier.empty()) {
        const auto [v, dir] = frontier.back();
        frontier.pop_back();
        if (visited[2 * v + dir]) {
            continue;
        }
        visited[2 * v + dir] = 1;
        if (v == y) {
            return false;
        }
        if (dir == kUp && !in_z[v]) {
            for (std::size_t p : dag.parents(v)) {
                frontier.emplace_back(p, kUp);
            }
            for (std::size_t c : dag.children(v)) {
                frontier.emplace_back(c, kDown);
            }
        } else if (dir == kDown) {
            if (!in_z[v]) {
                for (std::size_t c : dag.children(v)) {
                    frontier.emplace_back(c, kDown);
                }
            }
            if (z_ancestor[v]) {
                for (std::size_t p : dag.parents(v)) {
                    frontier.emplace_back(p, kUp);
                }
            }
        }
    }
    return true;
}

CiResult dsep_oracle_test(const UnrolledDag& dag, const DagNode& x, const DagNode& y,
                          std::span<const DagNode> z) {
    if (!dag.contains(x) || !dag.contains(y)) {
        throw UsageError("dsep_oracle_test: node outside the unrolled DAG");
    }
    std::vector<std::size_t> zi;
    zi.reserve(z.size());
    for (const auto& node : z) {
        if (!dag.contains(node)) {
            throw UsageError("dsep_oracle_test: conditioning node outside the unrolled DAG");
        }
        zi.push_back(dag.index(node));
    }
    const bool separated = d_separated(dag, dag.index(x), dag.index(y), zi);
    return separated ? CiResult{0.0, 1.0, 0, false} : CiResult{1.0, 0.0, 0, false};
}

}  // namespace pcmci_omega
