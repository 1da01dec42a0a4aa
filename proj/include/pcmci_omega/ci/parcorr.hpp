#pragma once

#include "pcmci_omega/ci/ci_test.hpp"

namespace pcmci_omega {

// Residual variance below this marks a test degenerate.
inline constexpr double kDegenerateVariance = 1e-12;

/**
 * Linear partial correlation on an assembled sample matrix.
 *
 * Column 0 and column 1 are each regressed on the remaining columns (OLS with
 * intercept); the statistic is the Pearson correlation of the two residual
 * vectors and the p-value comes from a two-sided Student-t transform with
 * rows - |z| - 2 degrees of freedom.
 */
[[nodiscard]] CiResult partial_correlation(const Eigen::MatrixXd& columns);

[[nodiscard]] CiResult parcorr_test(const TimeSeriesPanel& panel, std::size_t target,
                                    const LaggedLink& x, std::span<const LaggedLink> z,
                                    std::span<const int> sample_times);

class ParCorrTest final : public CiTest {
public:
    explicit ParCorrTest(const TimeSeriesPanel& panel);

    [[nodiscard]] CiResult test(const CiQuery& q) const override {
        return parcorr_test(panel_, q.target, q.x, q.z, q.sample_times);
    }
    [[nodiscard]] std::string name() const override { return "parcorr"; }

private:
    const TimeSeriesPanel& panel_;
};

}  // namespace pcmci_omega
