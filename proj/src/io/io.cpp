#include "pcmci_omega/io/io.hpp"

#include "pcmci_omega/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pcmci_omega {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        out.push_back(trim(std::string_view(line).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

template <typename T>
T require(const Json& j, const char* key) {
    if (!j.contains(key)) {
        throw DataError(std::string("missing field \"") + key + "\"");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("field \"") + key + "\": " + e.what());
    }
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

TimeSeriesPanel parse_panel_csv(std::istream& in, ValueKind kind) {
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError("panel CSV is empty");
    }
    const auto names = split(line);
    for (const auto& name : names) {
        if (name.empty()) {
            throw DataError("panel CSV header has an empty column name");
        }
    }
    const std::size_t n = names.size();
    std::vector<double> cells;
    std::size_t rows = 0;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split(line);
        if (fields.size() != n) {
            throw DataError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) + " fields, got " +
                            std::to_string(fields.size()));
        }
        for (const auto& f : fields) {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (f.empty() || ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(v)) {
                throw DataError("line " + std::to_string(line_no) + ": cannot parse \"" + f + "\" as a finite number");
            }
            cells.push_back(v);
        }
        ++rows;
    }
    if (rows == 0) {
        throw DataError("panel CSV has no data rows");
    }
    TimeSeriesPanel::Matrix values(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(rows));
    for (std::size_t t = 0; t < rows; ++t) {
        for (std::size_t j = 0; j < n; ++j) {
            values(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(t)) = cells[t * n + j];
        }
    }
    return TimeSeriesPanel(names, std::move(values), kind);
}

TimeSeriesPanel read_panel_csv(const std::filesystem::path& path, ValueKind kind) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open " + path.string());
    }
    try {
        return parse_panel_csv(in, kind);
    } catch (const DataError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

std::string panel_to_csv(const TimeSeriesPanel& panel) {
    std::string out;
    for (std::size_t j = 0; j < panel.n(); ++j) {
        out += (j ? "," : "") + panel.names()[j];
    }
    out += '\n';
    for (int t = 1; t <= panel.T(); ++t) {
        for (std::size_t j = 0; j < panel.n(); ++j) {
            if (j) {
                out += ',';
            }
            out += format_double(panel.value(j, t));
        }
        out += '\n';
    }
    return out;
}

Json spec_to_json(const ScmSpec& spec) {
    Json edges = Json::array();
    Json coeffs = Json::array();
    for (int j = 0; j < spec.n; ++j) {
        Json ej = Json::array();
        Json cj = Json::array();
        for (int k = 0; k < spec.omegas[j]; ++k) {
            Json ek = Json::array();
            Json ck = Json::array();
            for (int i = 0; i < spec.n; ++i) {
                Json erow = Json::array();
                Json crow = Json::array();
                for (int l = 0; l < spec.tau_max; ++l) {
                    erow.push_back(static_cast<int>(spec.phase_edges[j][k](i, l)));
                    if (!spec.is_discrete()) {
                        crow.push_back(spec.phase_coeffs[j][k](i, l));
                    }
                }
                ek.push_back(std::move(erow));
                ck.push_back(std::move(crow));
            }
            ej.push_back(std::move(ek));
            cj.push_back(std::move(ck));
        }
        edges.push_back(std::move(ej));
        coeffs.push_back(std::move(cj));
    }
    Json out = {{"n", spec.n},
                {"T", spec.T},
                {"tau_max", spec.tau_max},
                {"omegas", spec.omegas},
                {"noise", to_string(spec.noise)},
                {"seed", spec.seed},
                {"density", spec.density},
                {"link_function", to_string(spec.link_function)},
                {"noise_scale", spec.noise_scale},
                {"phase_edges", std::move(edges)}};
    if (spec.is_discrete()) {
        Json cpts = Json::array();
        for (const auto& cj : spec.cpts) {
            Json a = Json::array();
            for (const auto& ck : cj) {
                Json rows = Json::array();
                for (const auto& r : ck) {
                    rows.push_back({r[0], r[1]});
                }
                a.push_back(std::move(rows));
            }
            cpts.push_back(std::move(a));
        }
        out["cpts"] = std::move(cpts);
    } else {
        out["phase_coeffs"] = std::move(coeffs);
    }
    return out;
}

ScmSpec spec_from_json(const Json& j) {
    ScmSpec s;
    s.n = require<int>(j, "n");
    s.T = require<int>(j, "T");
    s.tau_max = require<int>(j, "tau_max");
    s.omegas = require<std::vector<int>>(j, "omegas");
    try {
        s.noise = parse_noise_kind(require<std::string>(j, "noise"));
        s.link_function = parse_link_function(j.value("link_function", std::string("linear")));
    } catch (const UsageError& e) {
        throw DataError(e.what());
    }
    s.seed = j.value("seed", std::uint64_t{0});
    s.density = j.value("density", 0.3);
    s.noise_scale = j.value("noise_scale", 1.0);
    if (s.n < 1 || s.tau_max < 1 || static_cast<int>(s.omegas.size()) != s.n) {
        throw SpecValidationError("invalid spec: inconsistent n, tau_max or omegas");
    }
    const auto edges = require<std::vector<std::vector<std::vector<std::vector<int>>>>>(j, "phase_edges");
    std::vector<std::vector<std::vector<std::vector<double>>>> coeffs;
    if (!s.is_discrete()) {
        coeffs = require<std::vector<std::vector<std::vector<std::vector<double>>>>>(j, "phase_coeffs");
    }
    auto shape_ok = [&](const auto& nested) {
        if (static_cast<int>(nested.size()) != s.n) {
            return false;
        }
        for (int v = 0; v < s.n; ++v) {
            if (static_cast<int>(nested[v].size()) != s.omegas[v]) {
                return false;
            }
            for (const auto& m : nested[v]) {
                if (static_cast<int>(m.size()) != s.n) {
                    return false;
                }
                for (const auto& row : m) {
                    if (static_cast<int>(row.size()) != s.tau_max) {
                        return false;
                    }
                }
            }
        }
        return true;
    };
    if (!shape_ok(edges) || (!s.is_discrete() && !shape_ok(coeffs))) {
        throw SpecValidationError("invalid spec: phase arrays must have shape [n][omega_j][n][tau_max]");
    }
    s.phase_edges.resize(s.n);
    if (!s.is_discrete()) {
        s.phase_coeffs.resize(s.n);
    }
    for (int v = 0; v < s.n; ++v) {
        for (int k = 0; k < s.omegas[v]; ++k) {
            EdgeMatrix e(s.n, s.tau_max);
            CoeffMatrix c = CoeffMatrix::Zero(s.n, s.tau_max);
            for (int i = 0; i < s.n; ++i) {
                for (int l = 0; l < s.tau_max; ++l) {
                    const int bit = edges[v][k][i][l];
                    if (bit != 0 && bit != 1) {
                        throw SpecValidationError("invalid spec: edge entries must be 0 or 1");
                    }
                    e(i, l) = static_cast<std::uint8_t>(bit);
                    if (!s.is_discrete()) {
                        c(i, l) = coeffs[v][k][i][l];
                    }
                }
            }
            s.phase_edges[v].push_back(e);
            if (!s.is_discrete()) {
                s.phase_coeffs[v].push_back(c);
            }
        }
    }
    if (s.is_discrete()) {
        const auto cpts = require<std::vector<std::vector<std::vector<std::vector<double>>>>>(j, "cpts");
        s.cpts.resize(cpts.size());
        for (std::size_t v = 0; v < cpts.size(); ++v) {
            for (const auto& ck : cpts[v]) {
                auto& rows = s.cpts[v].emplace_back();
                for (const auto& r : ck) {
                    if (r.size() != 2) {
                        throw SpecValidationError("invalid spec: CPT rows need two probabilities");
                    }
                    rows.push_back({r[0], r[1]});
                }
            }
        }
    }
    s.validate();
    return s;
}

Json graph_to_json(const PeriodicGraph& graph) {
    Json series = Json::array();
    for (std::size_t j = 0; j < graph.n; ++j) {
        const auto& s = graph.series[j];
        Json phases = Json::array();
        for (int k = 0; k < s.omega; ++k) {
            Json parents = Json::array();
            for (const auto& p : s.phases[static_cast<std::size_t>(k)]) {
                Json pj = {{"var", p.link.var}, {"lag", p.link.lag}};
                pj["pvalue"] = std::isnan(p.pvalue) ? Json(nullptr) : Json(p.pvalue);
                parents.push_back(std::move(pj));
            }
            phases.push_back({{"phase", k + 1}, {"parents", std::move(parents)}});
        }
        series.push_back({{"name", graph.names.empty() ? "X" + std::to_string(j + 1) : graph.names[j]},
                          {"omega", s.omega},
                          {"phases", std::move(phases)}});
    }
    return {{"n", graph.n},
            {"tau_max", graph.tau_max},
            {"anchor", graph.anchor},
            {"variables", graph.names.empty() ? default_names(graph.n) : graph.names},
            {"series", std::move(series)}};
}

PeriodicGraph graph_from_json(const Json& j) {
    PeriodicGraph g;
    g.n = require<std::size_t>(j, "n");
    g.tau_max = require<int>(j, "tau_max");
    g.anchor = j.value("anchor", 1);
    g.names = j.value("variables", default_names(g.n));
    const auto& series = j.at("series");
    if (!series.is_array() || series.size() != g.n) {
        throw DataError("graph JSON: series must list n entries");
    }
    for (const auto& sj : series) {
        SeriesEntry s;
        s.omega = require<int>(sj, "omega");
        const auto& phases = sj.at("phases");
        if (!phases.is_array() || static_cast<int>(phases.size()) != s.omega) {
            throw DataError("graph JSON: phase count must equal omega");
        }
        s.phases.resize(static_cast<std::size_t>(s.omega));
        for (const auto& pj : phases) {
            const int k = require<int>(pj, "phase");
            if (k < 1 || k > s.omega) {
                throw DataError("graph JSON: phase index out of range");
            }
            for (const auto& par : pj.at("parents")) {
                ParentLink p{{require<int>(par, "var"), require<int>(par, "lag")}};
                if (par.contains("pvalue") && par["pvalue"].is_number()) {
                    p.pvalue = par["pvalue"].get<double>();
                }
                s.phases[static_cast<std::size_t>(k - 1)].push_back(p);
            }
        }
        for (auto& ph : s.phases) {
            std::sort(ph.begin(), ph.end(), [](const ParentLink& a, const ParentLink& b) { return a.link < b.link; });
        }
        g.series.push_back(std::move(s));
    }
    try {
        g.validate();
    } catch (const UsageError& e) {
        throw DataError(std::string("graph JSON: ") + e.what());
    }
    return g;
}

Json edge_array_to_json(const EdgeArray4D& a) {
    Json edges = Json::array();
    for (std::size_t j = 0; j < a.n(); ++j) {
        Json ej = Json::array();
        for (int k = 0; k < a.period(); ++k) {
            Json ek = Json::array();
            for (std::size_t i = 0; i < a.n(); ++i) {
                Json row = Json::array();
                for (int l = 0; l <= a.max_lag(); ++l) {
                    row.push_back(a.get(j, k, i, l) ? 1 : 0);
                }
                ek.push_back(std::move(row));
            }
            ej.push_back(std::move(ek));
        }
        edges.push_back(std::move(ej));
    }
    return {{"shape", {a.n(), a.period(), a.n(), a.max_lag() + 1}}, {"edges", std::move(edges)}};
}

EdgeArray4D edge_array_from_json(const Json& j) {
    const auto shape = require<std::vector<int>>(j, "shape");
    if (shape.size() != 4 || shape[0] != shape[2] || shape[0] < 1 || shape[1] < 1 || shape[3] < 1) {
        throw DataError("edge array JSON: bad shape");
    }
    const auto edges = require<std::vector<std::vector<std::vector<std::vector<int>>>>>(j, "edges");
    EdgeArray4D a(static_cast<std::size_t>(shape[0]), shape[1], shape[3] - 1);
    if (static_cast<int>(edges.size()) != shape[0]) {
        throw DataError("edge array JSON: data does not match shape");
    }
    for (std::size_t v = 0; v < edges.size(); ++v) {
        if (static_cast<int>(edges[v].size()) != shape[1]) {
            throw DataError("edge array JSON: data does not match shape");
        }
        for (int k = 0; k < shape[1]; ++k) {
            const auto& ek = edges[v][static_cast<std::size_t>(k)];
            if (static_cast<int>(ek.size()) != shape[2]) {
                throw DataError("edge array JSON: data does not match shape");
            }
            for (std::size_t i = 0; i < ek.size(); ++i) {
                if (static_cast<int>(ek[i].size()) != shape[3]) {
                    throw DataError("edge array JSON: data does not match shape");
                }
                for (int l = 0; l < shape[3]; ++l) {
                    if (ek[i][static_cast<std::size_t>(l)] != 0) {
                        a.set(v, k, i, l);
                    }
                }
            }
        }
    }
    return a;
}

std::string scan_to_csv(const OmegaScan& scan, const std::vector<std::string>& names) {
    std::ostringstream out;
    out << "variable,omega,phase,parent_count,selected\n";
    for (std::size_t j = 0; j < scan.per_var.size(); ++j) {
        const std::string name = j < names.size() ? names[j] : "X" + std::to_string(j + 1);
        for (const auto& g : scan.per_var[j]) {
            if (!g.feasible) {
                continue;
            }
            const int sel = scan.selected.size() > j && scan.selected[j] == g.omega ? 1 : 0;
            for (std::size_t k = 0; k < g.phases.size(); ++k) {
                out << name << ',' << g.omega << ',' << k + 1 << ',' << g.phases[k].size() << ',' << sel << '\n';
            }
        }
    }
    return out.str();
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw DataError("cannot write " + tmp.string());
        }
        out << content;
        out.flush();
        if (!out) {
            throw DataError("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw DataError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

}  // namespace pcmci_omega
