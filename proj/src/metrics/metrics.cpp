#include "pcmci_omega/metrics/metrics.hpp"

#include "pcmci_omega/core/panel.hpp"
#include "pcmci_omega/core/periods.hpp"
#include "pcmci_omega/errors.hpp"

#include <algorithm>
#include <numeric>

namespace pcmci_omega {

EdgeArray4D::EdgeArray4D(std::size_t n, int period, int max_lag) : n_(n), period_(period), max_lag_(max_lag) {
    if (period < 1 || max_lag < 0) {
        throw UsageError("edge array: period must be >= 1 and max_lag >= 0");
    }
    data_.assign(n * static_cast<std::size_t>(period) * n * static_cast<std::size_t>(max_lag + 1), 0);
}

void EdgeArray4D::set(std::size_t j, int k, std::size_t i, int lag, bool value) {
    if (j >= n_ || i >= n_ || k < 0 || k >= period_ || lag < 0 || lag > max_lag_) {
        throw UsageError("edge array: index out of range");
    }
    if (lag == 0 && value) {
        throw UsageError("edge array: contemporaneous links are not representable");
    }
    data_[offset(j, k, i, lag)] = value ? 1 : 0;
}

EdgeArray4D to_edge_array(const PeriodicGraph& graph, int period, int max_lag, int anchor) {
    graph.validate();
    if (max_lag < graph.tau_max) {
        max_lag = graph.tau_max;
    }
    EdgeArray4D out(graph.n, period, max_lag);
    const PeriodicGraph g = graph.rebased(anchor);
    for (std::size_t j = 0; j < g.n; ++j) {
        const int w = g.series[j].omega;
        if (period % w != 0) {
            throw UsageError("edge array: period " + std::to_string(period) + " is not a multiple of omega " +
                             std::to_string(w));
        }
        for (int k = 0; k < period; ++k) {
            for (const auto& p : g.series[j].phases[static_cast<std::size_t>(k % w)]) {
                out.set(j, k, static_cast<std::size_t>(p.link.var), p.link.lag);
            }
        }
    }
    return out;
}

PeriodicGraph from_edge_array(const EdgeArray4D& array, int anchor) {
    const std::size_t n = array.n();
    const int period = array.period();
    PeriodicGraph g;
    g.n = n;
    g.tau_max = std::max(array.max_lag(), 1);
    g.anchor = anchor;
    g.names = default_names(n);
    g.series.resize(n);
    auto same_phase = [&](std::size_t j, int a, int b) {
        for (std::size_t i = 0; i < n; ++i) {
            for (int lag = 1; lag <= array.max_lag(); ++lag) {
                if (array.get(j, a, i, lag) != array.get(j, b, i, lag)) {
                    return false;
                }
            }
        }
        return true;
    };
    for (std::size_t j = 0; j < n; ++j) {
        int omega = period;
        for (int w = 1; w < period; ++w) {
            if (period % w != 0) {
                continue;
            }
            bool repeats = true;
            for (int k = w; k < period && repeats; ++k) {
                repeats = same_phase(j, k, k % w);
            }
            if (repeats) {
                omega = w;
                break;
            }
        }
        auto& s = g.series[j];
        s.omega = omega;
        s.phases.resize(static_cast<std::size_t>(omega));
        for (int k = 0; k < omega; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                for (int lag = 1; lag <= array.max_lag(); ++lag) {
                    if (array.get(j, k, i, lag)) {
                        s.phases[static_cast<std::size_t>(k)].push_back({{static_cast<int>(i), lag}});
                    }
                }
            }
            std::sort(s.phases[static_cast<std::size_t>(k)].begin(), s.phases[static_cast<std::size_t>(k)].end(),
                      [](const ParentLink& a, const ParentLink& b) { return a.link < b.link; });
        }
    }
    return g;
}

EdgeArray4D true_edge_array(const ScmSpec& spec, int period) {
    return to_edge_array(truth_graph(spec), period, spec.tau_max, spec.anchor());
}

std::pair<EdgeArray4D, EdgeArray4D> lcm_align(const EdgeArray4D& truth, const EdgeArray4D& est) {
    if (truth.n() != est.n()) {
        throw UsageError("lcm_align: arrays describe different variable counts");
    }
    const int period = std::lcm(truth.period(), est.period());
    const int max_lag = std::max(truth.max_lag(), est.max_lag());
    auto tile = [&](const EdgeArray4D& a) {
        EdgeArray4D out(a.n(), period, max_lag);
        for (std::size_t j = 0; j < a.n(); ++j) {
            for (int k = 0; k < period; ++k) {
                for (std::size_t i = 0; i < a.n(); ++i) {
                    for (int lag = 1; lag <= a.max_lag(); ++lag) {
                        if (a.get(j, k % a.period(), i, lag)) {
                            out.set(j, k, i, lag);
                        }
                    }
                }
            }
        }
        return out;
    };
    return {tile(truth), tile(est)};
}

AdjacencyScores scores_from_counts(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn) {
    AdjacencyScores s{tp, fp, fn};
    const auto d = [](std::uint64_t v) { return static_cast<double>(v); };
    if (tp + fp == 0) {
        s.precision = tp + fn == 0 ? 1.0 : 0.0;
    } else {
        s.precision = d(tp) / d(tp + fp);
    }
    s.recall = tp + fn == 0 ? 1.0 : d(tp) / d(tp + fn);
    s.f1 = s.precision + s.recall == 0.0 ? 0.0 : 2.0 * s.precision * s.recall / (s.precision + s.recall);
    return s;
}

AdjacencyScores adjacency_metrics(const EdgeArray4D& truth, const EdgeArray4D& est) {
    if (truth.n() != est.n() || truth.period() != est.period() || truth.max_lag() != est.max_lag()) {
        throw UsageError("adjacency_metrics: arrays are not aligned");
    }
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    const auto& a = truth.data();
    const auto& b = est.data();
    const auto lags = static_cast<std::size_t>(truth.max_lag() + 1);
    for (std::size_t e = 0; e < a.size(); ++e) {
        if (e % lags == 0) {
            continue;
        }
        tp += a[e] && b[e];
        fp += !a[e] && b[e];
        fn += a[e] && !b[e];
    }
    return scores_from_counts(tp, fp, fn);
}

bool omega_accuracy(int true_omega, int est_omega, int omega_ub) {
    if (true_omega < 1 || est_omega < 1 || omega_ub < 1) {
        throw UsageError("omega_accuracy: periodicities must be >= 1");
    }
    return est_omega % true_omega == 0 && est_omega <= omega_ub;
}

double omega_accuracy_rate(const std::vector<int>& truth, const std::vector<int>& est, int omega_ub) {
    if (truth.size() != est.size() || truth.empty()) {
        throw UsageError("omega_accuracy_rate: size mismatch");
    }
    int hits = 0;
    for (std::size_t j = 0; j < truth.size(); ++j) {
        hits += omega_accuracy(truth[j], est[j], omega_ub) ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(truth.size());
}

AdjacencyScores evaluate_graph(const PeriodicGraph& truth, const PeriodicGraph& est) {
    truth.validate();
    est.validate();
    if (truth.n != est.n) {
        throw UsageError("evaluate_graph: graphs describe different variable counts");
    }
    const PeriodicGraph e = est.rebased(truth.anchor);
    const auto to_u = [](int v) { return static_cast<std::uint64_t>(v); };
    const std::uint64_t period = to_u(std::lcm(lcm_periodicities(truth.omegas()), lcm_periodicities(e.omegas())));
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    for (std::size_t j = 0; j < truth.n; ++j) {
        const int wt = truth.series[j].omega;
        const int we = e.series[j].omega;
        const int local = std::lcm(wt, we);
        const std::uint64_t reps = period / to_u(local);
        for (int k = 0; k < local; ++k) {
            const LinkSet a = truth.series[j].links(k % wt);
            const LinkSet b = e.series[j].links(k % we);
            LinkSet both;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
            tp += reps * both.size();
            fp += reps * (b.size() - both.size());
            fn += reps * (a.size() - both.size());
        }
    }
    return scores_from_counts(tp, fp, fn);
}

}  // namespace pcmci_omega
