#include "pcmci_omega/ci/parcorr.hpp"

#include "pcmci_omega/errors.hpp"

#include <Eigen/QR>
#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>

namespace pcmci_omega {

namespace {

double two_sided_t_pvalue(double r, double df) {
    if (std::abs(r) >= 1.0) {
        return 0.0;
    }
    const double t = std::abs(r) * std::sqrt(df / ((1.0 - r) * (1.0 + r)));
    const boost::math::students_t dist(df);
    return std::clamp(2.0 * boost::math::cdf(boost::math::complement(dist, t)), 0.0, 1.0);
}

}  // namespace

CiResult partial_correlation(const Eigen::MatrixXd& columns) {
    const auto rows = columns.rows();
    const auto dim_z = columns.cols() - 2;
    if (dim_z < 0) {
        throw UsageError("partial_correlation: need at least two columns");
    }
    if (rows < dim_z + 3) {
        throw InsufficientDataError("partial_correlation: " + std::to_string(rows) +
                                    " samples for a conditioning set of size " +
                                    std::to_string(dim_z));
    }
    const auto n = static_cast<std::size_t>(rows);

    Eigen::MatrixXd resid(rows, 2);
    if (dim_z == 0) {
        resid = columns.leftCols(2).rowwise() - columns.leftCols(2).colwise().mean();
    } else {
        Eigen::MatrixXd design(rows, dim_z + 1);
        design.col(0).setOnes();
        design.rightCols(dim_z) = columns.rightCols(dim_z);
        const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
        const Eigen::MatrixXd coef = qr.solve(columns.leftCols(2));
        resid = columns.leftCols(2) - design * coef;
    }

    const double ss_y = resid.col(0).squaredNorm();
    const double ss_x = resid.col(1).squaredNorm();
    if (ss_y / static_cast<double>(n) < kDegenerateVariance ||
        ss_x / static_cast<double>(n) < kDegenerateVariance) {
        return CiResult::degenerate_result(n);
    }
    const double r =
        std::clamp(resid.col(0).dot(resid.col(1)) / std::sqrt(ss_y * ss_x), -1.0, 1.0);
    const double df = static_cast<double>(rows - dim_z - 2);
    return {r, two_sided_t_pvalue(r, df), n, false};
}

CiResult parcorr_test(const TimeSeriesPanel& panel, std::size_t target, const LaggedLink& x,
                      std::span<const LaggedLink> z, std::span<const int> sample_times) {
    if (panel.kind() != ValueKind::continuous) {
        throw UsageError("parcorr_test: panel must be continuous");
    }
    const auto m = lagged_design_matrix(panel, target, x, z, sample_times);
    return partial_correlation(m.columns);
}

ParCorrTest::ParCorrTest(const TimeSeriesPanel& panel) : panel_(panel) {
    if (panel.kind() != ValueKind::continuous) {
        throw UsageError("parcorr test needs a continuous panel");
    }
}

}  // namespace pcmci_omega
