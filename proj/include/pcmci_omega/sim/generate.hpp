#pragma once

#include "pcmci_omega/core/panel.hpp"
#include "pcmci_omega/sim/scm_spec.hpp"

#include <cstdint>

namespace pcmci_omega {

inline constexpr double kExplosionBound = 1e6;

/// Continuous panel from a gaussian/exponential spec. Throws StabilityError once any |value| > 1e6.
[[nodiscard]] TimeSeriesPanel gen_linear_panel(const ScmSpec& spec);

/// Binary panel sampled from the spec's conditional probability tables.
[[nodiscard]] TimeSeriesPanel gen_binary_panel(const ScmSpec& spec);

[[nodiscard]] TimeSeriesPanel generate_panel(const ScmSpec& spec);

struct SimulatedTrial {
    ScmSpec spec;
    TimeSeriesPanel panel;
    int attempts = 1;
};

// Seed of retry `attempt` (0 = the requested seed).
[[nodiscard]] std::uint64_t derived_seed(std::uint64_t seed, int attempt);

/// random_spec + generate_panel, redrawing the spec from derived seeds whenever generation diverges.
[[nodiscard]] SimulatedTrial simulate(const RandomSpecParams& params, int max_retries = 50);

}  // namespace pcmci_omega
