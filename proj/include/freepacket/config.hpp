#pragma once

#include "freepacket/grid.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace freepacket {

enum class Scenario { Fig1, Fig2, Fig3, Fig4, SpreadLaw, Bounds, Custom };
enum class FamilyKind { Gaussian, HermiteGauss, Derivative, Square };

std::string to_string(Scenario s);
std::string to_string(FamilyKind f);

/// Fully resolved scenario description. Times are physical (already scaled by
/// tau, or by m a^2 / hbar for the square family).
struct ScenarioConfig {
  Scenario scenario = Scenario::Fig1;
  FamilyKind family = FamilyKind::Derivative;
  int order = 2;
  double tau = 1.0;
  double width = 1.0;
  double boost = 0.0;
  PhysicsParams physics;
  Index grid_n = 4096;
  double half_width = 64.0;
  std::vector<double> times;
  std::string output_dir = ".";
  bool write_csv = true;
  bool write_svg = false;
  bool strict = false;

  /// Unit of the time list: tau, or m a^2 / hbar for the square family.
  double time_unit() const;
  Grid grid() const { return Grid::centered(half_width, grid_n); }
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, std::string field, const std::string& message)
      : std::runtime_error(format(line, field, message)), line_(line), field_(std::move(field)) {}

  /// 1-based line of the offending entry, 0 when not tied to a line.
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  static std::string format(int line, const std::string& field, const std::string& message) {
    std::string out = line > 0 ? "line " + std::to_string(line) + ": " : std::string();
    if (!field.empty()) out += field + ": ";
    return out + message;
  }

  int line_;
  std::string field_;
};

/// Parses a `key = value` document (dotted keys, `#` comments). Later entries
/// override earlier ones. Scenario presets fill every key the document leaves
/// unset; remaining keys take the global defaults
/// (hbar = m = 1, tau = a = 1, grid.n = 4096, grid.half_width = 64, csv only).
///
/// Keys: scenario, family, family.n, family.tau, family.a, family.boost,
/// physics.hbar, physics.mass, grid.n, grid.half_width, times, output.dir,
/// output.formats, strict.
ScenarioConfig parse_config(std::string_view text);

}  // namespace freepacket
