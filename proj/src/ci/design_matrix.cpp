#include "pcmci_omega/ci/ci_test.hpp"

#include "pcmci_omega/errors.hpp"

#include <algorithm>

namespace pcmci_omega {

LaggedSampleMatrix lagged_design_matrix(const TimeSeriesPanel& panel, std::size_t target,
                                        const LaggedLink& x, std::span<const LaggedLink> z,
                                        std::span<const int> sample_times) {
    const std::size_t n = panel.n();
    if (target >= n || x.var < 0 || static_cast<std::size_t>(x.var) >= n || x.lag < 1) {
        throw UsageError("lagged_design_matrix: target or x link out of range");
    }
    int max_lag = x.lag;
    for (const auto& l : z) {
        if (l.var < 0 || static_cast<std::size_t>(l.var) >= n || l.lag < 1) {
            throw UsageError("lagged_design_matrix: conditioning link " + to_string(l) +
                             " out of range");
        }
        max_lag = std::max(max_lag, l.lag);
    }

    LaggedSampleMatrix out;
    out.source_times.reserve(sample_times.size());
    for (int t : sample_times) {
        if (t > panel.T()) {
            throw UsageError("lagged_design_matrix: sample time " + std::to_string(t) +
                             " beyond T=" + std::to_string(panel.T()));
        }
        if (t - max_lag >= 1) {
            out.source_times.push_back(t);
        } else {
            ++out.dropped;
        }
    }
    if (out.source_times.empty()) {
        throw InsufficientDataError("lagged_design_matrix: no sample time has all lags (max lag " +
                                    std::to_string(max_lag) + ") inside the panel");
    }

    const auto rows = static_cast<Eigen::Index>(out.source_times.size());
    out.columns.resize(rows, static_cast<Eigen::Index>(z.size() + 2));
    const auto& v = panel.values();
    for (Eigen::Index r = 0; r < rows; ++r) {
        const int t = out.source_times[r];
        out.columns(r, 0) = v(static_cast<Eigen::Index>(target), t - 1);
        out.columns(r, 1) = v(x.var, t - x.lag - 1);
        for (std::size_t c = 0; c < z.size(); ++c) {
            out.columns(r, static_cast<Eigen::Index>(c + 2)) = v(z[c].var, t - z[c].lag - 1);
        }
    }
    return out;
}

}  // namespace pcmci_omega
