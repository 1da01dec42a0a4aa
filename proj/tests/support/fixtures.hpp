#pragma once

#include "pcmci_omega/sim/scm_spec.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace pcmci_omega::testing {

// (var, lag, coefficient) triples, vars 0-based.
struct TestLink {
    int var;
    int lag;
    double coeff;
};

inline ScmSpec make_spec(int n, int tau_max, int T, const std::vector<std::vector<std::vector<TestLink>>>& phases,
                         std::uint64_t seed = 1) {
    ScmSpec s;
    s.n = n;
    s.T = T;
    s.tau_max = tau_max;
    s.seed = seed;
    s.phase_edges.resize(n);
    s.phase_coeffs.resize(n);
    for (int j = 0; j < n; ++j) {
        s.omegas.push_back(static_cast<int>(phases[j].size()));
        for (const auto& phase : phases[j]) {
            EdgeMatrix e = EdgeMatrix::Zero(n, tau_max);
            CoeffMatrix c = CoeffMatrix::Zero(n, tau_max);
            for (const auto& l : phase) {
                e(l.var, l.lag - 1) = 1;
                c(l.var, l.lag - 1) = l.coeff;
            }
            s.phase_edges[j].push_back(e);
            s.phase_coeffs[j].push_back(c);
        }
    }
    return s;
}

/**
 * Three variables with periodicities 3, 2 and 1 and maximal lag 3.
 *
 * X1 cycles through {X1(t-1), X2(t-2)}, {X1(t-1), X3(t-1)}, {X1(t-1), X1(t-2)}
 * starting at t = 4; X2 alternates {X2(t-1), X1(t-3)} and {X3(t-2)}; X3 is an
 * AR(1).
 */
inline ScmSpec three_var_periodic_spec(int T = 2000, std::uint64_t seed = 1) {
    return make_spec(3, 3, T,
                     {{{{0, 1, 0.5}, {1, 2, 0.6}}, {{0, 1, 0.4}, {2, 1, -0.6}}, {{0, 1, 0.3}, {0, 2, 0.5}}},
                      {{{1, 1, 0.5}, {0, 3, 0.6}}, {{2, 2, 0.7}}},
                      {{{2, 1, 0.5}}}},
                     seed);
}

// X1 white noise, X2(t) = 0.7 X1(t-1) + noise.
inline ScmSpec chain_spec(int T = 1000, std::uint64_t seed = 1) {
    return make_spec(2, 1, T, {{{}}, {{{0, 1, 0.7}}}}, seed);
}

}  // namespace pcmci_omega::testing
