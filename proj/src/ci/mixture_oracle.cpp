#include "pcmci_omega/ci/mixture_oracle.hpp"

#include "pcmci_omega/ci/dsep.hpp"
#include "pcmci_omega/core/periods.hpp"
#include "pcmci_omega/errors.hpp"

#include <algorithm>

namespace pcmci_omega {

namespace {

int settled_base(const ScmSpec& spec, int max_query_lag) {
    const int period = lcm_periodicities(spec.omegas);
    const int margin = max_query_lag + 4 * chain_count(spec.tau_max, period);
    return spec.anchor() + period * ((margin + period - 1) / period);
}

}  // namespace

MixtureOracleTest::MixtureOracleTest(const ScmSpec& spec, int max_query_lag)
    : omegas_(spec.omegas),
      anchor_(spec.anchor()),
      period_(lcm_periodicities(spec.omegas)),
      max_query_lag_(max_query_lag),
      base_(settled_base(spec, max_query_lag)),
      dag_(unroll(spec, base_ + period_ - 1)) {
    if (max_query_lag < 1) {
        throw UsageError("MixtureOracleTest: max_query_lag must be >= 1");
    }
    phase_links_.resize(spec.n);
    for (int j = 0; j < spec.n; ++j) {
        for (int k = 0; k < spec.omegas[j]; ++k) {
            phase_links_[j].push_back(spec.phase_links(j, k));
        }
    }
}

CiResult MixtureOracleTest::test(const CiQuery& q) const {
    const auto n = omegas_.size();
    if (q.target >= n || q.x.var < 0 || static_cast<std::size_t>(q.x.var) >= n || q.x.lag < 1) {
        throw UsageError("oracle: query out of range");
    }
    int max_lag = q.x.lag;
    for (const auto& l : q.z) {
        max_lag = std::max(max_lag, l.lag);
    }
    if (max_lag > max_query_lag_) {
        throw UsageError("oracle: lag " + std::to_string(max_lag) + " exceeds the configured maximum " +
                         std::to_string(max_query_lag_));
    }

    std::vector<char> residue_seen(period_, 0);
    std::size_t retained = 0;
    for (int t : q.sample_times) {
        if (t - max_lag < 1) {
            continue;
        }
        ++retained;
        residue_seen[wrapped_phase(t, period_, anchor_) - 1] = 1;
    }
    if (retained == 0) {
        throw InsufficientDataError("oracle: no admissible sample time");
    }

    const int omega = omegas_[q.target];
    bool dependent = false;
    for (int r = 0; r < period_ && !dependent; ++r) {
        if (residue_seen[r] && contains(phase_links_[q.target][r % omega], q.x)) {
            dependent = true;
        }
    }
    std::vector<DagNode> z_nodes(q.z.size());
    for (int r = 0; r < period_ && !dependent; ++r) {
        if (!residue_seen[r]) {
            continue;
        }
        const int t = base_ + r;
        for (std::size_t c = 0; c < q.z.size(); ++c) {
            z_nodes[c] = {q.z[c].var, t - q.z[c].lag};
        }
        const auto res = dsep_oracle_test(dag_, {q.x.var, t - q.x.lag},
                                          {static_cast<int>(q.target), t}, z_nodes);
        dependent = res.p_value == 0.0;
    }
    return dependent ? CiResult{1.0, 0.0, retained, false} : CiResult{0.0, 1.0, retained, false};
}

}  // namespace pcmci_omega
