#pragma once

#include "pcmci_omega/ci/ci_test.hpp"

namespace pcmci_omega {

/**
 * G^2 conditional likelihood-ratio test on integer-coded columns.
 *
 * Strata are the realized joint configurations of columns 2.., degrees of
 * freedom are summed per stratum from the categories actually observed there.
 */
[[nodiscard]] CiResult g_squared(const Eigen::MatrixXd& columns);

[[nodiscard]] CiResult gsq_test(const TimeSeriesPanel& panel, std::size_t target,
                                const LaggedLink& x, std::span<const LaggedLink> z,
                                std::span<const int> sample_times);

class GSquaredTest final : public CiTest {
public:
    explicit GSquaredTest(const TimeSeriesPanel& panel);

    [[nodiscard]] CiResult test(const CiQuery& q) const override {
        return gsq_test(panel_, q.target, q.x, q.z, q.sample_times);
    }
    [[nodiscard]] std::string name() const override { return "gsq"; }

private:
    const TimeSeriesPanel& panel_;
};

}  // namespace pcmci_omega
