#include "pcmci_omega/sim/generate.hpp"

#include "pcmci_omega/errors.hpp"

#include <cmath>
#include <random>

namespace pcmci_omega {

namespace {

// Panels draw from their own stream so a spec file alone reproduces its data.
std::mt19937_64 noise_stream(std::uint64_t seed) {
    return std::mt19937_64(seed * 6364136223846793005ULL + 1442695040888963407ULL);
}

double link_value(LinkFunction f, double x) {
    return f == LinkFunction::linear ? x : x + kQuadraticWeight * x * x;
}

}  // namespace

TimeSeriesPanel gen_linear_panel(const ScmSpec& spec) {
    if (spec.is_discrete()) {
        throw UsageError("gen_linear_panel: spec has binary noise");
    }
    spec.validate();
    auto rng = noise_stream(spec.seed);
    std::normal_distribution<double> gaussian(0.0, 1.0);
    std::exponential_distribution<double> exponential(1.0);
    auto draw = [&] {
        return spec.noise == NoiseKind::gaussian ? gaussian(rng) : exponential(rng);
    };

    TimeSeriesPanel::Matrix values(spec.n, spec.T);
    for (int t = 1; t <= spec.T; ++t) {
        for (int j = 0; j < spec.n; ++j) {
            const double eps = draw();
            double v = eps;
            if (t > spec.tau_max) {
                const auto& e = spec.phase_edges[j][spec.phase_at(j, t)];
                const auto& c = spec.phase_coeffs[j][spec.phase_at(j, t)];
                double sum = 0.0;
                for (int i = 0; i < spec.n; ++i) {
                    for (int lag = 1; lag <= spec.tau_max; ++lag) {
                        if (e(i, lag - 1) != 0) {
                            sum += c(i, lag - 1) * link_value(spec.link_function, values(i, t - lag - 1));
                        }
                    }
                }
                v = sum + spec.noise_scale * eps;
            }
            if (!(std::abs(v) <= kExplosionBound)) {
                throw StabilityError("spec with seed " + std::to_string(spec.seed) +
                                     " diverged at t=" + std::to_string(t));
            }
            values(j, t - 1) = v;
        }
    }
    return TimeSeriesPanel(default_names(spec.n), std::move(values));
}

TimeSeriesPanel gen_binary_panel(const ScmSpec& spec) {
    if (!spec.is_discrete()) {
        throw UsageError("gen_binary_panel: spec is not binary");
    }
    spec.validate();
    auto rng = noise_stream(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<std::vector<LinkSet>> links(spec.n);
    for (int j = 0; j < spec.n; ++j) {
        for (int k = 0; k < spec.omegas[j]; ++k) {
            links[j].push_back(spec.phase_links(j, k));
        }
    }

    TimeSeriesPanel::Matrix values(spec.n, spec.T);
    for (int t = 1; t <= spec.T; ++t) {
        for (int j = 0; j < spec.n; ++j) {
            const double u = unit(rng);
            if (t <= spec.tau_max) {
                values(j, t - 1) = u < 0.5 ? 1.0 : 0.0;
                continue;
            }
            const int k = spec.phase_at(j, t);
            std::size_t config = 0;
            const auto& parents = links[j][k];
            for (std::size_t b = 0; b < parents.size(); ++b) {
                if (values(parents[b].var, t - parents[b].lag - 1) != 0.0) {
                    config |= std::size_t{1} << b;
                }
            }
            values(j, t - 1) = u < spec.cpts[j][k][config][1] ? 1.0 : 0.0;
        }
    }
    return TimeSeriesPanel(default_names(spec.n), std::move(values), ValueKind::discrete);
}

TimeSeriesPanel generate_panel(const ScmSpec& spec) {
    return spec.is_discrete() ? gen_binary_panel(spec) : gen_linear_panel(spec);
}

std::uint64_t derived_seed(std::uint64_t seed, int attempt) {
    return seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL;
}

SimulatedTrial simulate(const RandomSpecParams& params, int max_retries) {
    std::string last;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        RandomSpecParams p = params;
        p.seed = derived_seed(params.seed, attempt);
        ScmSpec spec = random_spec(p);
        try {
            TimeSeriesPanel panel = generate_panel(spec);
            return {std::move(spec), std::move(panel), attempt + 1};
        } catch (const StabilityError& e) {
            last = e.what();
        }
    }
    throw StabilityError("simulate: every spec diverged (seed " + std::to_string(params.seed) +
                         ", " + std::to_string(max_retries) + " attempts); last: " + last);
}

}  // namespace pcmci_omega
