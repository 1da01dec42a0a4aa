#include "pcmci_omega/pcmci/pcmci.hpp"

#include "pcmci_omega/errors.hpp"
#include "pcmci_omega/pcmci/fdr.hpp"
#include "pcmci_omega/util/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace pcmci_omega {

namespace {

// Advances c to the next p-subset of {0..m-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t m) {
    const std::size_t p = c.size();
    for (std::size_t k = p; k-- > 0;) {
        if (c[k] < m - p + k) {
            ++c[k];
            for (std::size_t l = k + 1; l < p; ++l) {
                c[l] = c[l - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

void check_config(const PcmciConfig& c) {
    if (c.tau_ub < 1) {
        throw UsageError("tau_ub must be >= 1");
    }
    if (!(c.alpha_pc > 0.0 && c.alpha_pc < 1.0) || !(c.alpha_mci > 0.0 && c.alpha_mci < 1.0)) {
        throw UsageError("significance levels must lie in (0, 1)");
    }
    if (c.q_max < 1) {
        throw UsageError("q_max must be >= 1");
    }
}

}  // namespace

LinkSet SupersetParents::links(std::size_t j) const {
    LinkSet out;
    out.reserve(per_var.at(j).size());
    for (const auto& r : per_var[j]) {
        out.push_back(r.link);
    }
    normalize(out);
    return out;
}

std::vector<int> sample_range(int start, int T) {
    if (start < 1 || start > T) {
        throw UsageError("sample start " + std::to_string(start) + " outside [1, " + std::to_string(T) + "]");
    }
    std::vector<int> times(static_cast<std::size_t>(T - start + 1));
    std::iota(times.begin(), times.end(), start);
    return times;
}

std::vector<RankedParent> pc1(const CiTest& test, std::size_t n, std::size_t j, int tau_ub,
                              double alpha_pc, int p_max, int q_max,
                              std::span<const int> sample_times, std::uint64_t visit_shuffle_seed) {
    if (j >= n || tau_ub < 1) {
        throw UsageError("pc1: bad target or tau_ub");
    }
    std::vector<RankedParent> parents;
    for (int i = 0; i < static_cast<int>(n); ++i) {
        for (int tau = 1; tau <= tau_ub; ++tau) {
            parents.push_back({{i, tau}, std::numeric_limits<double>::infinity(), false});
        }
    }
    if (p_max < 0) {
        p_max = static_cast<int>(n) * tau_ub;
    }
    std::mt19937_64 rng(visit_shuffle_seed);

    for (int p = 0; p <= p_max; ++p) {
        const auto count = parents.size();
        if (count == 0 || count - 1 < static_cast<std::size_t>(p)) {
            break;
        }
        std::vector<std::size_t> visit(count);
        std::iota(visit.begin(), visit.end(), 0);
        if (visit_shuffle_seed != 0) {
            std::shuffle(visit.begin(), visit.end(), rng);
        }
        std::vector<char> remove(count, 0);
        std::vector<LaggedLink> z(static_cast<std::size_t>(p));
        for (std::size_t a : visit) {
            auto& cand = parents[a];
            std::vector<std::size_t> comb(static_cast<std::size_t>(p));
            std::iota(comb.begin(), comb.end(), 0);
            const std::size_t others = count - 1;
            int q = 0;
            do {
                for (std::size_t k = 0; k < comb.size(); ++k) {
                    const std::size_t idx = comb[k] < a ? comb[k] : comb[k] + 1;
                    z[k] = parents[idx].link;
                }
                CiResult res;
                try {
                    res = test.test({j, cand.link, z, sample_times});
                } catch (const InsufficientDataError&) {
                    cand.flagged = true;
                    break;
                }
                cand.min_stat = std::min(cand.min_stat, std::abs(res.statistic));
                if (res.p_value > alpha_pc) {
                    remove[a] = 1;
                    break;
                }
            } while (++q < q_max && next_combination(comb, others));
        }
        std::vector<RankedParent> kept;
        for (std::size_t a = 0; a < count; ++a) {
            if (!remove[a]) {
                kept.push_back(parents[a]);
            }
        }
        std::stable_sort(kept.begin(), kept.end(),
                         [](const RankedParent& l, const RankedParent& r) { return l.min_stat > r.min_stat; });
        parents = std::move(kept);
    }
    return parents;
}

SupersetParents run_pc1_all(const CiTest& test, std::size_t n, const PcmciConfig& config,
                            std::span<const int> sample_times) {
    check_config(config);
    SupersetParents out;
    out.per_var.resize(n);
    parallel_for(n, config.workers, [&](std::size_t j) {
        out.per_var[j] = pc1(test, n, j, config.tau_ub, config.alpha_pc, config.p_max, config.q_max,
                             sample_times, config.visit_shuffle_seed);
    });
    return out;
}

MciResult mci(const CiTest& test, std::size_t n, const SupersetParents& supersets, int tau_ub,
              int p_x, std::span<const int> sample_times, int workers) {
    if (supersets.per_var.size() != n || tau_ub < 1) {
        throw UsageError("mci: superset count does not match n");
    }
    MciResult r;
    r.n = n;
    r.tau_ub = tau_ub;
    const std::size_t total = n * n * static_cast<std::size_t>(tau_ub);
    r.pvalues.assign(total, 1.0);
    r.statistics.assign(total, 0.0);
    r.insufficient.assign(total, 0);

    std::vector<LinkSet> target_sets(n);
    for (std::size_t j = 0; j < n; ++j) {
        target_sets[j] = supersets.links(j);
    }
    parallel_for(total, workers, [&](std::size_t s) {
        const std::size_t j = s / (n * static_cast<std::size_t>(tau_ub));
        const std::size_t i = (s / static_cast<std::size_t>(tau_ub)) % n;
        const int tau = static_cast<int>(s % static_cast<std::size_t>(tau_ub)) + 1;
        const LaggedLink x{static_cast<int>(i), tau};

        LinkSet z;
        for (const auto& l : target_sets[j]) {
            if (l != x) {
                z.push_back(l);
            }
        }
        const auto& src = supersets.per_var[i];
        const std::size_t take = p_x < 0 ? src.size() : std::min(src.size(), static_cast<std::size_t>(p_x));
        for (std::size_t k = 0; k < take; ++k) {
            z.push_back(src[k].link.shifted(tau));
        }
        normalize(z);
        std::erase(z, x);
        try {
            const auto res = test.test({j, x, z, sample_times});
            r.pvalues[s] = res.p_value;
            r.statistics[s] = res.statistic;
        } catch (const InsufficientDataError&) {
            r.insufficient[s] = 1;
        }
    });
    r.adjusted = r.pvalues;
    return r;
}

void apply_fdr(MciResult& result) {
    result.adjusted = fdr_adjust(result.pvalues);
}

PeriodicGraph window_graph(const MciResult& result, double alpha_mci, std::vector<std::string> names,
                           int anchor) {
    PeriodicGraph g;
    g.n = result.n;
    g.tau_max = result.tau_ub;
    g.anchor = anchor;
    g.names = std::move(names);
    g.series.resize(result.n);
    for (std::size_t j = 0; j < result.n; ++j) {
        auto& phase = g.series[j].phases.emplace_back();
        for (std::size_t i = 0; i < result.n; ++i) {
            for (int tau = 1; tau <= result.tau_ub; ++tau) {
                const auto s = result.slot(j, i, tau);
                if (!result.insufficient[s] && result.adjusted[s] <= alpha_mci) {
                    phase.push_back({{static_cast<int>(i), tau}, result.adjusted[s]});
                }
            }
        }
    }
    return g;
}

PcmciResult run_pcmci(const TimeSeriesPanel& panel, const CiTest& test, const PcmciConfig& config) {
    check_config(config);
    const int start = config.sample_start();
    const auto times = sample_range(start, panel.T());
    PcmciResult out;
    out.supersets = run_pc1_all(test, panel.n(), config, times);
    out.mci = mci(test, panel.n(), out.supersets, config.tau_ub, config.p_x, times, config.workers);
    if (config.fdr) {
        apply_fdr(out.mci);
    }
    out.graph = window_graph(out.mci, config.alpha_mci, panel.names(), start);
    return out;
}

}  // namespace pcmci_omega
