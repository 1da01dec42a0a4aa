#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace pcmci_omega::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kInternal = 3 };

/**
 * Every setting of every subcommand. Config files use the same keys as the
 * long flags with dashes replaced by underscores; flags override the file.
 */
struct RunConfig {
    std::string command;
    std::string input;
    std::string output = "out";
    std::string spec;
    std::string graph;
    std::string truth;
    std::string algorithm = "pcmci-omega";
    std::vector<std::string> algorithms{"pcmci", "pcmci-omega"};
    std::string test = "parcorr";
    std::string preset;
    int tau_ub = 5;
    int omega_ub = 10;
    double alpha_pc = 0.05;
    double alpha_mci = 0.05;
    bool turning_point = true;
    bool fdr = false;
    std::uint64_t seed = 0;
    int trials = 1;
    int workers = 1;
    // simulation
    int n = 5;
    int T = 1000;
    int tau_max = 5;
    int omega_max = 1;
    std::string noise = "gaussian";
    double density = 0.3;
    std::string link_function = "linear";
    // benchmark grid
    std::vector<int> grid_T{500, 2000, 8000};
    std::vector<int> grid_omega_max{1, 2, 3, 4, 5};
};

[[nodiscard]] nlohmann::json config_to_json(const RunConfig& c);
// Applies the keys present in j; unknown keys raise UsageError.
void apply_config_json(RunConfig& c, const nlohmann::json& j);
// Fills the benchmark settings of a named preset ("paper" or "desk").
void apply_preset(RunConfig& c, const std::string& preset);

[[nodiscard]] int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_simulate(const RunConfig& c, std::ostream& out);
int cmd_discover(const RunConfig& c, std::ostream& out);
int cmd_evaluate(const RunConfig& c, std::ostream& out);
int cmd_benchmark(const RunConfig& c, std::ostream& out, std::ostream& err);

}  // namespace pcmci_omega::cli
