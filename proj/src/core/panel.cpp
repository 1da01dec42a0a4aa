#include "pcmci_omega/core/panel.hpp"

#include "pcmci_omega/errors.hpp"

#include <algorithm>
#include <cmath>

namespace pcmci_omega {

TimeSeriesPanel::TimeSeriesPanel(std::vector<std::string> names, Matrix values, ValueKind kind)
    : names_(std::move(names)), values_(std::move(values)), kind_(kind) {
    if (names_.empty()) {
        throw UsageError("panel needs at least one variable");
    }
    if (values_.cols() < 1) {
        throw UsageError("panel needs at least one timestep");
    }
    if (static_cast<std::size_t>(values_.rows()) != names_.size()) {
        throw UsageError("panel has " + std::to_string(names_.size()) + " names but " +
                         std::to_string(values_.rows()) + " value rows");
    }
    for (Eigen::Index j = 0; j < values_.rows(); ++j) {
        for (Eigen::Index t = 0; t < values_.cols(); ++t) {
            if (!std::isfinite(values_(j, t))) {
                throw DataError("non-finite value for variable '" + names_[j] + "' at t=" +
                                std::to_string(t + 1));
            }
        }
    }
    if (kind_ == ValueKind::discrete) {
        alphabets_.assign(names_.size(), 0);
        for (Eigen::Index j = 0; j < values_.rows(); ++j) {
            for (Eigen::Index t = 0; t < values_.cols(); ++t) {
                const double v = values_(j, t);
                if (v < 0.0 || v != std::floor(v) || v > 1e6) {
                    throw DataError("discrete panel needs non-negative integer codes; variable '" +
                                    names_[j] + "' has " + std::to_string(v) + " at t=" +
                                    std::to_string(t + 1));
                }
                alphabets_[j] = std::max(alphabets_[j], static_cast<int>(v) + 1);
            }
        }
    }
}

TimeSeriesPanel TimeSeriesPanel::as_discrete() const {
    return TimeSeriesPanel(names_, values_, ValueKind::discrete);
}

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        names.push_back("X" + std::to_string(j + 1));
    }
    return names;
}

}  // namespace pcmci_omega
