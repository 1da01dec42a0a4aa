#include "pcmci_omega/ci/gsquared.hpp"

#include "pcmci_omega/errors.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <map>
#include <utility>
#include <vector>

namespace pcmci_omega {

namespace {

struct Stratum {
    std::map<std::pair<int, int>, long> cells;
    std::map<int, long> x_margin;
    std::map<int, long> y_margin;
    long total = 0;
};

}  // namespace

CiResult g_squared(const Eigen::MatrixXd& columns) {
    if (columns.cols() < 2) {
        throw UsageError("g_squared: need at least two columns");
    }
    const auto rows = columns.rows();
    const auto dim_z = columns.cols() - 2;

    std::map<std::vector<int>, Stratum> strata;
    std::vector<int> key(static_cast<std::size_t>(dim_z));
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < dim_z; ++c) {
            key[c] = static_cast<int>(columns(r, c + 2));
        }
        auto& s = strata[key];
        const int y = static_cast<int>(columns(r, 0));
        const int x = static_cast<int>(columns(r, 1));
        ++s.cells[{x, y}];
        ++s.x_margin[x];
        ++s.y_margin[y];
        ++s.total;
    }

    double g2 = 0.0;
    long df = 0;
    for (const auto& [_, s] : strata) {
        for (const auto& [xy, observed] : s.cells) {
            const double expected = static_cast<double>(s.x_margin.at(xy.first)) *
                                    static_cast<double>(s.y_margin.at(xy.second)) /
                                    static_cast<double>(s.total);
            g2 += static_cast<double>(observed) * std::log(static_cast<double>(observed) / expected);
        }
        df += static_cast<long>(s.x_margin.size() - 1) * static_cast<long>(s.y_margin.size() - 1);
    }
    g2 = std::max(0.0, 2.0 * g2);

    const auto n = static_cast<std::size_t>(rows);
    if (df == 0) {
        return CiResult::degenerate_result(n);
    }
    const double p = boost::math::gamma_q(static_cast<double>(df) / 2.0, g2 / 2.0);
    return {g2, p, n, false};
}

CiResult gsq_test(const TimeSeriesPanel& panel, std::size_t target, const LaggedLink& x,
                  std::span<const LaggedLink> z, std::span<const int> sample_times) {
    if (panel.kind() != ValueKind::discrete) {
        throw UsageError("gsq_test: panel must be discrete");
    }
    const auto m = lagged_design_matrix(panel, target, x, z, sample_times);
    return g_squared(m.columns);
}

GSquaredTest::GSquaredTest(const TimeSeriesPanel& panel) : panel_(panel) {
    if (panel.kind() != ValueKind::discrete) {
        throw UsageError("G^2 test needs a discrete panel");
    }
}

}  // namespace pcmci_omega
