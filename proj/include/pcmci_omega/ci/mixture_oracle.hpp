#pragma once

#include "pcmci_omega/ci/ci_test.hpp"
#include "pcmci_omega/sim/scm_spec.hpp"
#include "pcmci_omega/sim/unrolled_dag.hpp"

namespace pcmci_omega {

/**
 * Exact CI answers for a known spec, including samples pooled across phases.
 *
 * A pooled test of X^i_{t-lag} against X^j_t is answered "dependent" when the
 * link is a parent of X^j_t in any true phase the samples touch, or when the
 * two nodes are d-connected given z at any of the sampled time residues. The
 * d-separation checks run on a copy of the unrolled graph far enough from t = 1
 * that every residue modulo the joint period sees a settled history.
 */
class MixtureOracleTest final : public CiTest {
public:
    MixtureOracleTest(const ScmSpec& spec, int max_query_lag);

    [[nodiscard]] CiResult test(const CiQuery& q) const override;
    [[nodiscard]] std::string name() const override { return "oracle"; }

    [[nodiscard]] int period() const { return period_; }
    [[nodiscard]] int base_time() const { return base_; }
    [[nodiscard]] const UnrolledDag& dag() const { return dag_; }

private:
    std::vector<int> omegas_;
    std::vector<std::vector<LinkSet>> phase_links_;
    int anchor_;
    int period_;
    int max_query_lag_;
    int base_;
    UnrolledDag dag_;
};

}  // namespace pcmci_omega
