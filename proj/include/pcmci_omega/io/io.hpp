#pragma once

#include "pcmci_omega/core/panel.hpp"
#include "pcmci_omega/core/periodic_graph.hpp"
#include "pcmci_omega/metrics/metrics.hpp"
#include "pcmci_omega/omega/discover.hpp"
#include "pcmci_omega/sim/scm_spec.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace pcmci_omega {

using Json = nlohmann::json;

// Header row of names, then one row per timestep. Throws DataError with the offending line.
[[nodiscard]] TimeSeriesPanel parse_panel_csv(std::istream& in, ValueKind kind = ValueKind::continuous);
[[nodiscard]] TimeSeriesPanel read_panel_csv(const std::filesystem::path& path,
                                             ValueKind kind = ValueKind::continuous);
[[nodiscard]] std::string panel_to_csv(const TimeSeriesPanel& panel);

[[nodiscard]] Json spec_to_json(const ScmSpec& spec);
[[nodiscard]] ScmSpec spec_from_json(const Json& j);

[[nodiscard]] Json graph_to_json(const PeriodicGraph& graph);
[[nodiscard]] PeriodicGraph graph_from_json(const Json& j);

// {"shape": [n, period, n, max_lag + 1], "edges": nested 0/1 arrays}
[[nodiscard]] Json edge_array_to_json(const EdgeArray4D& array);
[[nodiscard]] EdgeArray4D edge_array_from_json(const Json& j);

// Columns variable, omega, phase, parent_count, selected.
[[nodiscard]] std::string scan_to_csv(const OmegaScan& scan, const std::vector<std::string>& names);

[[nodiscard]] Json read_json_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file, then renames it over `path`.
void atomic_write(const std::filesystem::path& path, const std::string& content);

[[nodiscard]] std::string format_double(double v);

}  // namespace pcmci_omega
