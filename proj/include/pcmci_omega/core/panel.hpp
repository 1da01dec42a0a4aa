#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pcmci_omega {

enum class ValueKind { continuous, discrete };

/**
 * n variables observed over T timesteps.
 *
 * Time is 1-based throughout the library: value(j, 1) is the first row of the
 * source CSV. Discrete panels hold non-negative integer codes stored as doubles
 * together with the per-variable alphabet size.
 */
class TimeSeriesPanel {
public:
    using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    TimeSeriesPanel(std::vector<std::string> names, Matrix values,
                    ValueKind kind = ValueKind::continuous);

    [[nodiscard]] std::size_t n() const { return names_.size(); }
    [[nodiscard]] int T() const { return static_cast<int>(values_.cols()); }
    [[nodiscard]] ValueKind kind() const { return kind_; }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] const Matrix& values() const { return values_; }

    [[nodiscard]] double value(std::size_t var, int t) const { return values_(var, t - 1); }

    // Contiguous series of one variable, index 0 is t = 1.
    [[nodiscard]] std::span<const double> series(std::size_t var) const {
        return {values_.row(var).data(), static_cast<std::size_t>(values_.cols())};
    }

    // Alphabet sizes (max code + 1); empty for continuous panels.
    [[nodiscard]] const std::vector<int>& alphabet_sizes() const { return alphabets_; }

    // Re-tags a panel as discrete after checking every entry is a non-negative integer code.
    [[nodiscard]] TimeSeriesPanel as_discrete() const;

private:
    std::vector<std::string> names_;
    Matrix values_;
    ValueKind kind_;
    std::vector<int> alphabets_;
};

[[nodiscard]] std::vector<std::string> default_names(std::size_t n);

}  // namespace pcmci_omega
