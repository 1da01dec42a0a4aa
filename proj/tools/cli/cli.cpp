#include "cli.hpp"

#include "pcmci_omega/ci/gsquared.hpp"
#include "pcmci_omega/ci/mixture_oracle.hpp"
#include "pcmci_omega/ci/parcorr.hpp"
#include "pcmci_omega/core/periods.hpp"
#include "pcmci_omega/errors.hpp"
#include "pcmci_omega/io/io.hpp"
#include "pcmci_omega/metrics/metrics.hpp"
#include "pcmci_omega/omega/discover.hpp"
#include "pcmci_omega/sim/generate.hpp"
#include "pcmci_omega/util/parallel.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace pcmci_omega::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

template <typename T>
void take(const json& j, const char* key, T& field) {
    if (j.contains(key)) {
        try {
            field = j.at(key).get<T>();
        } catch (const json::exception& e) {
            throw UsageError(std::string("config key \"") + key + "\": " + e.what());
        }
    }
}

std::string numbered(const std::string& stem, int i, const std::string& ext) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "_%03d", i);
    return stem + buf + ext;
}

void validate(const RunConfig& c) {
    auto in_unit = [](double a) { return a > 0.0 && a < 1.0; };
    if (!in_unit(c.alpha_pc) || !in_unit(c.alpha_mci)) {
        throw UsageError("alpha_pc and alpha_mci must lie in (0, 1)");
    }
    if (c.tau_ub < 1 || c.omega_ub < 1) {
        throw UsageError("tau_ub and omega_ub must be >= 1");
    }
    if (c.trials < 1 || c.workers < 1) {
        throw UsageError("trials and workers must be >= 1");
    }
    if (c.algorithm != "pcmci" && c.algorithm != "pcmci-omega") {
        throw UsageError("algorithm must be pcmci or pcmci-omega, got " + c.algorithm);
    }
    for (const auto& a : c.algorithms) {
        if (a != "pcmci" && a != "pcmci-omega") {
            throw UsageError("unknown algorithm " + a);
        }
    }
    if (c.test != "parcorr" && c.test != "gsq" && c.test != "oracle") {
        throw UsageError("test must be parcorr, gsq or oracle, got " + c.test);
    }
    if (c.n < 1 || c.T < 1 || c.tau_max < 1 || c.omega_max < 1) {
        throw UsageError("n, T, tau_max and omega_max must be >= 1");
    }
    if (!(c.density > 0.0 && c.density <= 1.0)) {
        throw UsageError("density must lie in (0, 1]");
    }
    (void)parse_noise_kind(c.noise);
    (void)parse_link_function(c.link_function);
}

PcmciConfig pcmci_config(const RunConfig& c, int workers) {
    PcmciConfig p;
    p.tau_ub = c.tau_ub;
    p.alpha_pc = c.alpha_pc;
    p.alpha_mci = c.alpha_mci;
    p.fdr = c.fdr;
    p.workers = workers;
    return p;
}

std::unique_ptr<CiTest> make_test(const std::string& kind, const TimeSeriesPanel& panel, const ScmSpec* spec,
                                  int tau_ub) {
    if (kind == "parcorr") {
        return std::make_unique<ParCorrTest>(panel);
    }
    if (kind == "gsq") {
        return std::make_unique<GSquaredTest>(panel);
    }
    if (spec == nullptr) {
        throw UsageError("test=oracle needs --spec with the generating spec");
    }
    if (static_cast<std::size_t>(spec->n) != panel.n()) {
        throw UsageError("spec and panel disagree on the number of variables");
    }
    return std::make_unique<MixtureOracleTest>(*spec, 2 * tau_ub);
}

PeriodicGraph run_algorithm(const std::string& algorithm, const TimeSeriesPanel& panel, const CiTest& test,
                            const RunConfig& c, int workers, std::optional<OmegaScan>* scan = nullptr) {
    if (algorithm == "pcmci") {
        return run_pcmci(panel, test, pcmci_config(c, workers)).graph;
    }
    DiscoverConfig d;
    d.pcmci = pcmci_config(c, workers);
    d.omega_ub = c.omega_ub;
    d.turning_point = c.turning_point;
    auto res = discover(panel, test, d);
    if (scan != nullptr) {
        *scan = std::move(res.scan);
    }
    return std::move(res.graph);
}

void require_file(const std::string& path, const char* what) {
    if (path.empty()) {
        throw UsageError(std::string("missing --") + what);
    }
    if (!fs::is_regular_file(path)) {
        throw UsageError(std::string("--") + what + " " + path + " does not exist");
    }
}

void write_manifest(const RunConfig& c, const fs::path& dir, const std::vector<std::string>& files, json extra = {}) {
    json m = {{"command", c.command}, {"config", config_to_json(c)}, {"outputs", files}};
    for (auto& [k, v] : extra.items()) {
        m[k] = v;
    }
    atomic_write(dir / "manifest.json", m.dump(2) + "\n");
}

RandomSpecParams spec_params(const RunConfig& c, int T, int omega_max, std::uint64_t seed) {
    RandomSpecParams p;
    p.n = c.n;
    p.T = T;
    p.tau_max = c.tau_max;
    p.omega_max = omega_max;
    p.noise = parse_noise_kind(c.noise);
    p.seed = seed;
    p.density = c.density;
    p.link_function = parse_link_function(c.link_function);
    return p;
}

struct Stat {
    double mean = 0.0;
    double se = 0.0;
};

Stat mean_se(const std::vector<double>& v) {
    Stat s;
    if (v.empty()) {
        return {std::nan(""), std::nan("")};
    }
    for (double x : v) {
        s.mean += x;
    }
    s.mean /= static_cast<double>(v.size());
    if (v.size() > 1) {
        double ss = 0.0;
        for (double x : v) {
            ss += (x - s.mean) * (x - s.mean);
        }
        s.se = std::sqrt(ss / static_cast<double>(v.size() - 1)) / std::sqrt(static_cast<double>(v.size()));
    }
    return s;
}

}  // namespace

json config_to_json(const RunConfig& c) {
    return {{"command", c.command},
            {"input", c.input},
            {"output", c.output},
            {"spec", c.spec},
            {"graph", c.graph},
            {"truth", c.truth},
            {"algorithm", c.algorithm},
            {"algorithms", c.algorithms},
            {"test", c.test},
            {"preset", c.preset},
            {"tau_ub", c.tau_ub},
            {"omega_ub", c.omega_ub},
            {"alpha_pc", c.alpha_pc},
            {"alpha_mci", c.alpha_mci},
            {"turning_point", c.turning_point},
            {"fdr", c.fdr},
            {"seed", c.seed},
            {"trials", c.trials},
            {"workers", c.workers},
            {"n", c.n},
            {"T", c.T},
            {"tau_max", c.tau_max},
            {"omega_max", c.omega_max},
            {"noise", c.noise},
            {"density", c.density},
            {"link_function", c.link_function},
            {"grid_T", c.grid_T},
            {"grid_omega_max", c.grid_omega_max}};
}

void apply_config_json(RunConfig& c, const json& j) {
    if (!j.is_object()) {
        throw UsageError("config file must hold a JSON object");
    }
    const json known = config_to_json(c);
    for (const auto& [key, value] : j.items()) {
        if (!known.contains(key)) {
            throw UsageError("unknown config key \"" + key + "\"");
        }
    }
    take(j, "input", c.input);
    take(j, "output", c.output);
    take(j, "spec", c.spec);
    take(j, "graph", c.graph);
    take(j, "truth", c.truth);
    take(j, "algorithm", c.algorithm);
    take(j, "algorithms", c.algorithms);
    take(j, "test", c.test);
    take(j, "preset", c.preset);
    take(j, "tau_ub", c.tau_ub);
    take(j, "omega_ub", c.omega_ub);
    take(j, "alpha_pc", c.alpha_pc);
    take(j, "alpha_mci", c.alpha_mci);
    take(j, "turning_point", c.turning_point);
    take(j, "fdr", c.fdr);
    take(j, "seed", c.seed);
    take(j, "trials", c.trials);
    take(j, "workers", c.workers);
    take(j, "n", c.n);
    take(j, "T", c.T);
    take(j, "tau_max", c.tau_max);
    take(j, "omega_max", c.omega_max);
    take(j, "noise", c.noise);
    take(j, "density", c.density);
    take(j, "link_function", c.link_function);
    take(j, "grid_T", c.grid_T);
    take(j, "grid_omega_max", c.grid_omega_max);
}

void apply_preset(RunConfig& c, const std::string& preset) {
    if (preset.empty()) {
        return;
    }
    if (preset != "paper" && preset != "desk") {
        throw UsageError("preset must be paper or desk, got " + preset);
    }
    c.preset = preset;
    c.n = 5;
    c.tau_max = 5;
    c.tau_ub = 15;
    c.omega_ub = 15;
    c.noise = "gaussian";
    c.grid_T = {500, 2000, 8000};
    c.grid_omega_max = {1, 2, 3, 4, 5};
    c.trials = preset == "paper" ? 100 : 20;
}

int cmd_simulate(const RunConfig& c, std::ostream& out) {
    const fs::path dir = c.output;
    std::vector<std::string> files;
    json trials = json::array();
    for (int i = 0; i < c.trials; ++i) {
        const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(i);
        const auto trial = simulate(spec_params(c, c.T, c.omega_max, seed));
        const int period = lcm_periodicities(trial.spec.omegas);

        json spec = spec_to_json(trial.spec);
        spec["config"] = config_to_json(c);
        json truth = edge_array_to_json(true_edge_array(trial.spec, period));
        truth["anchor"] = trial.spec.anchor();
        truth["config"] = config_to_json(c);

        const auto panel_name = numbered("panel", i, ".csv");
        const auto spec_name = numbered("spec", i, ".json");
        const auto truth_name = numbered("truth", i, ".json");
        atomic_write(dir / panel_name, panel_to_csv(trial.panel));
        atomic_write(dir / spec_name, spec.dump(2) + "\n");
        atomic_write(dir / truth_name, truth.dump() + "\n");
        files.insert(files.end(), {panel_name, spec_name, truth_name});
        trials.push_back({{"trial", i}, {"seed", seed}, {"spec_seed", trial.spec.seed}, {"attempts", trial.attempts}});
        out << "trial " << i << ": omegas";
        for (int w : trial.spec.omegas) {
            out << ' ' << w;
        }
        out << '\n';
    }
    write_manifest(c, dir, files, {{"trials", trials}});
    return kOk;
}

int cmd_discover(const RunConfig& c, std::ostream& out) {
    require_file(c.input, "input");
    std::optional<ScmSpec> spec;
    if (c.test == "oracle") {
        require_file(c.spec, "spec");
        spec = spec_from_json(read_json_file(c.spec));
    }
    const auto panel = read_panel_csv(c.input, c.test == "gsq" ? ValueKind::discrete : ValueKind::continuous);
    const auto test = make_test(c.test, panel, spec ? &*spec : nullptr, c.tau_ub);

    std::optional<OmegaScan> scan;
    const auto graph = run_algorithm(c.algorithm, panel, *test, c, c.workers, &scan);

    const fs::path dir = c.output;
    json g = graph_to_json(graph);
    g["config"] = config_to_json(c);
    std::vector<std::string> files{"graph.json"};
    atomic_write(dir / "graph.json", g.dump(2) + "\n");
    if (scan) {
        atomic_write(dir / "scan.csv", scan_to_csv(*scan, panel.names()));
        files.emplace_back("scan.csv");
    }
    write_manifest(c, dir, files);
    for (std::size_t j = 0; j < graph.n; ++j) {
        out << graph.names[j] << ": omega=" << graph.series[j].omega;
        for (int k = 0; k < graph.series[j].omega; ++k) {
            out << " {";
            const auto links = graph.series[j].links(k);
            for (std::size_t a = 0; a < links.size(); ++a) {
                out << (a ? "," : "") << "(" << graph.names[static_cast<std::size_t>(links[a].var)] << ",-"
                    << links[a].lag << ")";
            }
            out << "}";
        }
        out << '\n';
    }
    return kOk;
}

int cmd_evaluate(const RunConfig& c, std::ostream& out) {
    require_file(c.graph, "graph");
    const auto est = graph_from_json(read_json_file(c.graph));
    PeriodicGraph truth;
    if (!c.spec.empty()) {
        require_file(c.spec, "spec");
        truth = truth_graph(spec_from_json(read_json_file(c.spec)));
    } else if (!c.truth.empty()) {
        require_file(c.truth, "truth");
        const auto tj = read_json_file(c.truth);
        truth = from_edge_array(edge_array_from_json(tj), tj.value("anchor", 1));
    } else {
        throw UsageError("evaluate needs --spec or --truth");
    }
    if (truth.n != est.n) {
        throw DataError("truth and estimate disagree on the number of variables");
    }
    const auto s = evaluate_graph(truth, est);
    const double acc = omega_accuracy_rate(truth.omegas(), est.omegas(), c.omega_ub);
    json m = {{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}, {"tp", s.tp},
              {"fp", s.fp},               {"fn", s.fn},         {"omega_acc", acc}, {"config", config_to_json(c)}};
    const fs::path dir = c.output;
    atomic_write(dir / "metrics.json", m.dump(2) + "\n");
    write_manifest(c, dir, {"metrics.json"});
    out << "precision=" << s.precision << " recall=" << s.recall << " f1=" << s.f1 << " omega_acc=" << acc << '\n';
    return kOk;
}

int cmd_benchmark(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.grid_T.empty() || c.grid_omega_max.empty() || c.algorithms.empty()) {
        throw UsageError("benchmark grid and algorithm list must be non-empty");
    }
    struct Cell {
        int T;
        int omega_max;
    };
    std::vector<Cell> cells;
    for (int T : c.grid_T) {
        for (int w : c.grid_omega_max) {
            cells.push_back({T, w});
        }
    }
    struct Row {
        std::string algorithm;
        AdjacencyScores scores;
        double omega_acc = 0.0;
        double runtime = 0.0;
        std::string error;
    };
    const std::size_t jobs = cells.size() * static_cast<std::size_t>(c.trials);
    std::vector<std::vector<Row>> results(jobs);

    parallel_for(jobs, c.workers, [&](std::size_t job) {
        const auto& cell = cells[job / static_cast<std::size_t>(c.trials)];
        const int trial = static_cast<int>(job % static_cast<std::size_t>(c.trials));
        auto& rows = results[job];
        std::optional<SimulatedTrial> sim;
        std::string sim_error;
        try {
            sim = simulate(spec_params(c, cell.T, cell.omega_max, c.seed + static_cast<std::uint64_t>(trial)));
        } catch (const std::exception& e) {
            sim_error = e.what();
        }
        for (const auto& algorithm : c.algorithms) {
            Row row;
            row.algorithm = algorithm;
            if (!sim) {
                row.error = sim_error;
                rows.push_back(std::move(row));
                continue;
            }
            try {
                const std::string kind = c.test == "parcorr" && sim->spec.is_discrete() ? "gsq" : c.test;
                const auto test = make_test(kind, sim->panel, &sim->spec, c.tau_ub);
                const auto t0 = std::chrono::steady_clock::now();
                const auto graph = run_algorithm(algorithm, sim->panel, *test, c, 1);
                row.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                const auto truth = truth_graph(sim->spec);
                row.scores = evaluate_graph(truth, graph);
                row.omega_acc = omega_accuracy_rate(truth.omegas(), graph.omegas(), c.omega_ub);
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    });

    std::ostringstream trials_csv;
    std::ostringstream failures_csv;
    trials_csv << "trial,algorithm,T,omega_max,precision,recall,f1,omega_acc,runtime_sec\n";
    failures_csv << "trial,algorithm,T,omega_max,error\n";
    // key: (algorithm, T, omega_max) in first-seen order
    std::vector<std::tuple<std::string, int, int>> keys;
    std::map<std::tuple<std::string, int, int>, std::map<std::string, std::vector<double>>> groups;
    std::size_t failures = 0;
    for (std::size_t job = 0; job < jobs; ++job) {
        const auto& cell = cells[job / static_cast<std::size_t>(c.trials)];
        const int trial = static_cast<int>(job % static_cast<std::size_t>(c.trials));
        for (const auto& r : results[job]) {
            const auto key = std::make_tuple(r.algorithm, cell.T, cell.omega_max);
            if (!groups.contains(key)) {
                keys.push_back(key);
                groups[key];
            }
            if (!r.error.empty()) {
                ++failures;
                std::string msg = r.error;
                std::replace(msg.begin(), msg.end(), ',', ';');
                std::replace(msg.begin(), msg.end(), '\n', ' ');
                failures_csv << trial << ',' << r.algorithm << ',' << cell.T << ',' << cell.omega_max << ',' << msg
                             << '\n';
                continue;
            }
            trials_csv << trial << ',' << r.algorithm << ',' << cell.T << ',' << cell.omega_max << ','
                       << format_double(r.scores.precision) << ',' << format_double(r.scores.recall) << ','
                       << format_double(r.scores.f1) << ',' << format_double(r.omega_acc) << ','
                       << format_double(r.runtime) << '\n';
            auto& g = groups[key];
            g["precision"].push_back(r.scores.precision);
            g["recall"].push_back(r.scores.recall);
            g["f1"].push_back(r.scores.f1);
            g["omega_acc"].push_back(r.omega_acc);
            g["runtime"].push_back(r.runtime);
        }
    }

    const std::vector<std::string> deterministic{"precision", "recall", "f1", "omega_acc"};
    std::ostringstream summary;
    summary << "algorithm,T,omega_max,trials";
    for (const auto& m : deterministic) {
        summary << ',' << m << "_mean," << m << "_se";
    }
    summary << '\n';
    std::map<std::string, std::ostringstream> plots;
    for (const auto& m : {"precision", "recall", "f1", "omega_acc", "runtime"}) {
        plots[m] << "algorithm,T,omega_max,mean,se\n";
    }
    for (const auto& key : keys) {
        const auto& [algorithm, T, w] = key;
        auto& g = groups[key];
        summary << algorithm << ',' << T << ',' << w << ',' << g["f1"].size();
        for (const auto& m : deterministic) {
            const auto s = mean_se(g[m]);
            summary << ',' << format_double(s.mean) << ',' << format_double(s.se);
        }
        summary << '\n';
        for (auto& [m, stream] : plots) {
            const auto s = mean_se(g[m]);
            stream << algorithm << ',' << T << ',' << w << ',' << format_double(s.mean) << ',' << format_double(s.se)
                   << '\n';
        }
    }

    const fs::path dir = c.output;
    std::vector<std::string> files{"trials.csv", "summary.csv", "failures.csv"};
    atomic_write(dir / "trials.csv", trials_csv.str());
    atomic_write(dir / "summary.csv", summary.str());
    atomic_write(dir / "failures.csv", failures_csv.str());
    for (auto& [m, stream] : plots) {
        const auto name = "plot_" + m + ".csv";
        atomic_write(dir / name, stream.str());
        files.push_back(name);
    }
    write_manifest(c, dir, files, {{"failures", failures}});
    out << jobs * c.algorithms.size() - failures << " runs ok, " << failures << " failed\n";
    if (failures > 0) {
        err << failures << " benchmark runs failed; see failures.csv\n";
    }
    return failures == jobs * c.algorithms.size() ? kData : kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Periodic causal discovery on semi-stationary time series"};
    app.require_subcommand(1);
    std::string config_path;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file; flags override it");
        sub->add_option("-o,--output", c.output, "output directory");
        sub->add_option("--seed", c.seed);
        sub->add_option("--workers", c.workers);
    };
    auto algo = [&](CLI::App* sub) {
        sub->add_option("--tau-ub", c.tau_ub);
        sub->add_option("--omega-ub", c.omega_ub);
        sub->add_option("--alpha-pc", c.alpha_pc);
        sub->add_option("--alpha-mci", c.alpha_mci);
        sub->add_option("--test", c.test, "parcorr | gsq | oracle");
        sub->add_option("--turning-point", c.turning_point, "on | off");
        sub->add_option("--fdr", c.fdr, "on | off");
    };
    auto gen = [&](CLI::App* sub) {
        sub->add_option("--n", c.n);
        sub->add_option("--tau-max", c.tau_max);
        sub->add_option("--noise", c.noise, "gaussian | exponential | binary");
        sub->add_option("--density", c.density);
        sub->add_option("--link-function", c.link_function, "linear | quadratic");
        sub->add_option("--trials", c.trials);
    };

    auto* sim = app.add_subcommand("simulate", "generate panels with known periodic ground truth");
    common(sim);
    gen(sim);
    sim->add_option("--T", c.T);
    sim->add_option("--omega-max", c.omega_max);

    auto* disc = app.add_subcommand("discover", "estimate a periodic causal graph from a panel CSV");
    common(disc);
    algo(disc);
    disc->add_option("-i,--input", c.input, "panel CSV");
    disc->add_option("--algorithm", c.algorithm, "pcmci | pcmci-omega");
    disc->add_option("--spec", c.spec, "spec JSON, needed by the oracle test");

    auto* eval = app.add_subcommand("evaluate", "score an estimated graph against ground truth");
    common(eval);
    eval->add_option("--graph", c.graph, "estimated graph JSON");
    eval->add_option("--spec", c.spec, "generating spec JSON");
    eval->add_option("--truth", c.truth, "truth edge-array JSON");
    eval->add_option("--omega-ub", c.omega_ub);

    auto* bench = app.add_subcommand("benchmark", "simulate and score over a grid of T and omega_max");
    common(bench);
    algo(bench);
    gen(bench);
    bench->add_option("--preset", c.preset, "paper | desk");
    bench->add_option("--algorithms", c.algorithms)->delimiter(',');
    bench->add_option("--grid-T", c.grid_T)->delimiter(',');
    bench->add_option("--grid-omega-max", c.grid_omega_max)->delimiter(',');

    // First pass finds the config file and preset so flags can override them.
    std::optional<json> file;
    std::string preset_flag;
    for (std::size_t a = 0; a < args.size(); ++a) {
        auto value_of = [&](const std::string& flag) -> std::optional<std::string> {
            if (args[a] == flag && a + 1 < args.size()) {
                return args[a + 1];
            }
            if (args[a].rfind(flag + "=", 0) == 0) {
                return args[a].substr(flag.size() + 1);
            }
            return std::nullopt;
        };
        if (auto v = value_of("--config")) {
            config_path = *v;
        }
        if (auto v = value_of("--preset")) {
            preset_flag = *v;
        }
    }
    try {
        if (!config_path.empty()) {
            if (!fs::is_regular_file(config_path)) {
                throw UsageError("config file " + config_path + " does not exist");
            }
            try {
                file = read_json_file(config_path);
            } catch (const DataError& e) {
                throw UsageError(e.what());
            }
            apply_config_json(c, *file);
        }
        apply_preset(c, preset_flag.empty() ? c.preset : preset_flag);
        if (file) {
            RunConfig preset_applied = c;
            apply_config_json(preset_applied, *file);
            preset_applied.preset = c.preset;
            c = preset_applied;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        c.command = app.get_subcommands().front()->get_name();
        validate(c);
        if (c.command == "simulate") {
            return cmd_simulate(c, out);
        }
        if (c.command == "discover") {
            return cmd_discover(c, out);
        }
        if (c.command == "evaluate") {
            return cmd_evaluate(c, out);
        }
        return cmd_benchmark(c, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DataError& e) {
        err << "data error: " << e.what() << '\n';
        return kData;
    } catch (const StabilityError& e) {
        err << "data error: " << e.what() << '\n';
        return kData;
    } catch (const fs::filesystem_error& e) {
        err << "data error: " << e.what() << '\n';
        return kData;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace pcmci_omega::cli
