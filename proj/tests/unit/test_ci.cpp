#include "pcmci_omega/ci/dsep.hpp"
#include "pcmci_omega/ci/gsquared.hpp"
#include "pcmci_omega/ci/mixture_oracle.hpp"
#include "pcmci_omega/ci/parcorr.hpp"
#include "pcmci_omega/errors.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

using namespace pcmci_omega;
using namespace pcmci_omega::testing;

namespace {

Eigen::MatrixXd random_columns(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> g;
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = g(rng);
    }
    // mix in the conditioning columns so the partial and marginal correlations differ
    for (Eigen::Index c = 2; c < cols; ++c) {
        m.col(0) += 0.5 * m.col(c);
        m.col(1) -= 0.4 * m.col(c);
    }
    return m;
}

std::vector<std::vector<double>> as_vectors(const Eigen::MatrixXd& m) {
    std::vector<std::vector<double>> out(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) out[c].push_back(m(r, c));
    }
    return out;
}

// Reference G^2 on binary columns with at most one binary conditioning column.
std::pair<double, int> naive_g2(const Eigen::MatrixXd& m) {
    const bool has_z = m.cols() > 2;
    double counts[2][2][2] = {};
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        const int z = has_z ? static_cast<int>(m(r, 2)) : 0;
        counts[z][static_cast<int>(m(r, 1))][static_cast<int>(m(r, 0))] += 1;
    }
    double g2 = 0;
    int df = 0;
    for (int z = 0; z < 2; ++z) {
        double nz = 0, nx[2] = {}, ny[2] = {};
        for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) {
                nz += counts[z][x][y];
                nx[x] += counts[z][x][y];
                ny[y] += counts[z][x][y];
            }
        }
        if (nz == 0) continue;
        for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) {
                const double o = counts[z][x][y];
                if (o > 0) g2 += 2 * o * std::log(o * nz / (nx[x] * ny[y]));
            }
        }
        df += ((nx[0] > 0) + (nx[1] > 0) - 1) * ((ny[0] > 0) + (ny[1] > 0) - 1);
    }
    return {g2, df};
}

// d-separation by enumerating every simple path of the skeleton.
bool naive_dsep(const UnrolledDag& dag, std::size_t x, std::size_t y, const std::vector<std::size_t>& z) {
    const std::size_t m = dag.node_count();
    std::vector<char> in_z(m, 0);
    for (auto v : z) in_z[v] = 1;
    auto has_edge = [&](std::size_t a, std::size_t b) {
        const auto& p = dag.parents(b);
        return std::find(p.begin(), p.end(), a) != p.end();
    };
    std::vector<char> z_or_desc(m, 0);
    for (std::size_t v = 0; v < m; ++v) {
        std::vector<std::size_t> stack{v};
        std::vector<char> seen(m, 0);
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            if (seen[u]) continue;
            seen[u] = 1;
            if (in_z[u]) z_or_desc[v] = 1;
            for (auto c : dag.children(u)) stack.push_back(c);
        }
    }
    std::vector<std::size_t> path{x};
    std::vector<char> on_path(m, 0);
    on_path[x] = 1;
    bool active_found = false;
    std::function<void()> walk = [&] {
        if (active_found) return;
        const auto u = path.back();
        if (u == y) {
            for (std::size_t k = 1; k + 1 < path.size(); ++k) {
                const auto a = path[k - 1], v = path[k], b = path[k + 1];
                const bool collider = has_edge(a, v) && has_edge(b, v);
                if (collider ? !z_or_desc[v] : in_z[v]) return;
            }
            active_found = true;
            return;
        }
        for (std::size_t w = 0; w < m; ++w) {
            if (on_path[w] || !(has_edge(u, w) || has_edge(w, u))) continue;
            on_path[w] = 1;
            path.push_back(w);
            walk();
            path.pop_back();
            on_path[w] = 0;
        }
    };
    walk();
    return !active_found;
}

}  // namespace

TEST_CASE("partial correlation matches the normal-equation reference") {
    std::mt19937_64 rng(5);
    for (int dim_z = 0; dim_z <= 3; ++dim_z) {
        for (int rep = 0; rep < 10; ++rep) {
            const auto m = random_columns(rng, 40 + 7 * rep, dim_z + 2);
            const auto res = partial_correlation(m);
            CHECK_FALSE(res.degenerate);
            CHECK(res.statistic == doctest::Approx(naive_partial_correlation(as_vectors(m))).epsilon(1e-9));
            CHECK(res.effective_n == static_cast<std::size_t>(m.rows()));
        }
    }
}

TEST_CASE("partial correlation p-value for two degrees of freedom") {
    // df = 2: two-sided p = 1 - |t| / sqrt(2 + t^2)
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 20; ++rep) {
        const auto m = random_columns(rng, 4, 2);
        const auto res = partial_correlation(m);
        const double r = res.statistic;
        const double t = r * std::sqrt(2.0 / (1 - r * r));
        CHECK(res.p_value == doctest::Approx(1 - std::abs(t) / std::sqrt(2 + t * t)).epsilon(1e-9));
    }
}

TEST_CASE("partial correlation edge cases") {
    Eigen::MatrixXd m(3, 3);
    m << 1, 2, 3, 4, 5, 6, 7, 8, 10;
    CHECK_THROWS_AS((void)partial_correlation(m), InsufficientDataError);
    Eigen::MatrixXd c(10, 2);
    c.col(0).setConstant(2.0);
    c.col(1).setLinSpaced(10, 0, 1);
    const auto res = partial_correlation(c);
    CHECK(res.degenerate);
    CHECK(res.p_value == 1.0);
    Eigen::MatrixXd perfect(10, 2);
    perfect.col(1).setLinSpaced(10, 0, 1);
    perfect.col(0) = 3 * perfect.col(1);
    CHECK(partial_correlation(perfect).statistic == doctest::Approx(1.0));
    CHECK(partial_correlation(perfect).p_value < 1e-12);
}

TEST_CASE("design matrix lines up lagged values and drops early samples") {
    TimeSeriesPanel::Matrix v(2, 6);
    v << 1, 2, 3, 4, 5, 6, 10, 20, 30, 40, 50, 60;
    const TimeSeriesPanel p({"a", "b"}, v);
    const std::vector<LaggedLink> z{{1, 3}};
    const std::vector<int> times{2, 3, 4, 5, 6};
    const auto m = lagged_design_matrix(p, 1, {0, 1}, z, times);
    CHECK(m.dropped == 2);
    REQUIRE(m.effective_n() == 3);
    CHECK(m.source_times == std::vector<int>{4, 5, 6});
    CHECK(m.columns(0, 0) == 40);
    CHECK(m.columns(0, 1) == 3);
    CHECK(m.columns(0, 2) == 10);
    const std::vector<int> early{1, 2};
    CHECK_THROWS_AS((void)lagged_design_matrix(p, 1, {0, 1}, z, early), InsufficientDataError);
    const std::vector<int> late{7};
    CHECK_THROWS_AS((void)lagged_design_matrix(p, 1, {0, 1}, {}, late), UsageError);
}

TEST_CASE("G^2 matches contingency enumeration") {
    std::mt19937_64 rng(21);
    std::bernoulli_distribution coin(0.5), flip(0.2);
    for (int rep = 0; rep < 30; ++rep) {
        const bool with_z = rep % 2 == 1;
        Eigen::MatrixXd m(60 + rep, with_z ? 3 : 2);
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            const int z = coin(rng);
            const int x = coin(rng);
            const int y = (rep % 3 == 0) ? (x ^ static_cast<int>(flip(rng))) : static_cast<int>(coin(rng));
            m(r, 0) = y;
            m(r, 1) = x;
            if (with_z) m(r, 2) = z;
        }
        const auto [g2, df] = naive_g2(m);
        const auto res = g_squared(m);
        CHECK(res.statistic == doctest::Approx(g2).epsilon(1e-9));
        // chi-square survival in closed form for df 1 and 2
        const double p = df == 1 ? std::erfc(std::sqrt(g2 / 2)) : std::exp(-g2 / 2);
        CHECK(res.p_value == doctest::Approx(p).epsilon(1e-9));
    }
}

TEST_CASE("G^2 without variation is degenerate") {
    Eigen::MatrixXd m(20, 2);
    m.col(0).setZero();
    for (Eigen::Index r = 0; r < 20; ++r) m(r, 1) = r % 2;
    CHECK(g_squared(m).degenerate);
    CHECK(g_squared(m).p_value == 1.0);
}

TEST_CASE("tests reject panels of the wrong kind") {
    TimeSeriesPanel::Matrix v(1, 4);
    v << 0.5, 1.5, 0.1, 0.2;
    const TimeSeriesPanel cont({"a"}, v);
    CHECK_THROWS_AS(GSquaredTest{cont}, UsageError);
    TimeSeriesPanel::Matrix b(1, 4);
    b << 0, 1, 1, 0;
    const TimeSeriesPanel disc({"a"}, b, ValueKind::discrete);
    CHECK_THROWS_AS(ParCorrTest{disc}, UsageError);
}

TEST_CASE("d-separation agrees with path enumeration on random DAGs") {
    std::mt19937_64 rng(77);
    std::bernoulli_distribution edge(0.3), pick(0.3);
    int separated = 0;
    for (int rep = 0; rep < 500; ++rep) {
        // one variable over 8 time steps gives an arbitrary DAG on 8 ordered nodes
        UnrolledDag dag(1, 8);
        for (int a = 1; a <= 8; ++a) {
            for (int b = a + 1; b <= 8; ++b) {
                if (edge(rng)) dag.add_edge({0, a}, {0, b});
            }
        }
        std::uniform_int_distribution<std::size_t> node(0, 7);
        const auto x = node(rng);
        auto y = node(rng);
        while (y == x) y = node(rng);
        std::vector<std::size_t> z;
        for (std::size_t v = 0; v < 8; ++v) {
            if (v != x && v != y && pick(rng)) z.push_back(v);
        }
        const bool expected = naive_dsep(dag, x, y, z);
        REQUIRE(d_separated(dag, x, y, z) == expected);
        REQUIRE(d_separated(dag, y, x, z) == expected);
        separated += expected;
    }
    CHECK(separated > 50);
    CHECK(separated < 450);
}

TEST_CASE("d-separation oracle result encoding") {
    UnrolledDag dag(1, 3);
    dag.add_edge({0, 1}, {0, 2});
    dag.add_edge({0, 2}, {0, 3});
    const std::vector<DagNode> mid{{0, 2}};
    const auto sep = dsep_oracle_test(dag, {0, 1}, {0, 3}, mid);
    CHECK(sep.p_value == 1.0);
    CHECK(sep.statistic == 0.0);
    const auto dep = dsep_oracle_test(dag, {0, 1}, {0, 3}, {});
    CHECK(dep.p_value == 0.0);
    CHECK(dep.statistic == 1.0);
}

TEST_CASE("mixture oracle on a stationary chain") {
    const auto spec = chain_spec(200);
    const MixtureOracleTest oracle(spec, 4);
    const auto times = std::vector<int>{10, 11, 12, 13, 14, 15};
    CHECK(oracle.test({1, {0, 1}, {}, times}).p_value == 0.0);
    const std::vector<LaggedLink> z{{0, 1}};
    CHECK(oracle.test({1, {0, 2}, z, times}).p_value == 1.0);
    CHECK(oracle.test({0, {1, 1}, {}, times}).p_value == 1.0);
    CHECK(oracle.period() == 1);
    const std::vector<LaggedLink> too_far{{0, 5}};
    CHECK_THROWS_AS((void)oracle.test({1, {0, 1}, too_far, times}), UsageError);
}

TEST_CASE("mixture oracle pools phases") {
    const auto spec = three_var_periodic_spec(300);
    const MixtureOracleTest oracle(spec, 6);
    CHECK(oracle.period() == 6);
    std::vector<int> all, phase2;
    for (int t = 12; t <= 60; ++t) {
        all.push_back(t);
        if ((t - 4) % 3 == 1) phase2.push_back(t);
    }
    // X2(t-2) -> X1(t) only in phase 1 of X1
    CHECK(oracle.test({0, {1, 2}, {}, all}).p_value == 0.0);
    const std::vector<LaggedLink> z2{{0, 1}, {2, 1}};
    CHECK(oracle.test({0, {1, 2}, z2, phase2}).p_value == 1.0);
    CHECK(oracle.test({0, {1, 2}, z2, all}).p_value == 0.0);
}
