#pragma once

#include "freepacket/config.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace freepacket {

/// Grid-sizing diagnostics for a configuration (empty when the grid looks adequate).
std::vector<std::string> grid_warnings(const ScenarioConfig& cfg);

struct ScenarioReport {
  std::vector<std::string> warnings;
  std::vector<std::filesystem::path> files;
};

/// Runs a scenario and writes its artifacts into cfg.output_dir:
///   <scenario>_t<index>.csv   x, re_psi, im_psi, density
///                             (+ x_over_t, t_times_density for fig2 and fig4)
///   <scenario>_summary.csv    t, delta_x, delta_p, mean_x, mean_r, delta_x_law,
///                             short_time_bound, short_time_error,
///                             asymptotic_bound, asymptotic_error
///   <scenario>.svg            density plot, when svg output is enabled
/// Quantities that do not exist for the packet (divergent moments,
/// inapplicable bounds) are written as nan. Throws std::runtime_error on I/O
/// failure.
ScenarioReport run_scenario(const ScenarioConfig& cfg);

}  // namespace freepacket
