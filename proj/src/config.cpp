#include "freepacket/config.hpp"

#include "freepacket/packets.hpp"
#include "freepacket/special_functions.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

namespace freepacket {

namespace {

struct Entry {
  std::string value;
  int line = 0;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& key, const Entry& e) {
  double v = 0.0;
  const char* begin = e.value.data();
  const char* end = begin + e.value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError(e.line, key, "expected a finite number, got '" + e.value + "'");
  }
  return v;
}

long long parse_int(const std::string& key, const Entry& e) {
  long long v = 0;
  const char* begin = e.value.data();
  const char* end = begin + e.value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(e.line, key, "expected an integer, got '" + e.value + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const Entry& e) {
  if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
  if (e.value == "false" || e.value == "0" || e.value == "no") return false;
  throw ConfigError(e.line, key, "expected true or false, got '" + e.value + "'");
}

Scenario parse_scenario(const Entry& e) {
  static const std::map<std::string, Scenario> names = {
      {"fig1", Scenario::Fig1},           {"fig2", Scenario::Fig2},
      {"fig3", Scenario::Fig3},           {"fig4", Scenario::Fig4},
      {"spread-law", Scenario::SpreadLaw}, {"bounds", Scenario::Bounds},
      {"custom", Scenario::Custom}};
  const auto it = names.find(e.value);
  if (it == names.end()) throw ConfigError(e.line, "scenario", "unknown scenario '" + e.value + "'");
  return it->second;
}

FamilyKind parse_family(const Entry& e) {
  static const std::map<std::string, FamilyKind> names = {
      {"gaussian", FamilyKind::Gaussian},
      {"hermite-gauss", FamilyKind::HermiteGauss},
      {"derivative", FamilyKind::Derivative},
      {"square", FamilyKind::Square}};
  const auto it = names.find(e.value);
  if (it == names.end()) throw ConfigError(e.line, "family", "unknown family '" + e.value + "'");
  return it->second;
}

struct Preset {
  FamilyKind family = FamilyKind::Derivative;
  int order = 2;
  std::vector<double> times;
  Index grid_n = 4096;
  double half_width = 64.0;
};

Preset preset_for(Scenario s) {
  switch (s) {
    case Scenario::Fig1:
      return {FamilyKind::Derivative, 2, {0.0, 0.1, 0.2, 0.4, 0.6, 0.8, 1.0}, 4096, 64.0};
    case Scenario::Fig2:
      return {FamilyKind::Derivative, 2, {3.0, 4.0, 6.0, 16.0}, 4096, 256.0};
    case Scenario::Fig3:
      return {FamilyKind::Square, 0, {0.0, 0.001, 0.01, 0.1}, 4096, 2.0};
    case Scenario::Fig4:
      return {FamilyKind::Square, 0, {0.1, 0.2, 0.5}, 4096, 8.0};
    case Scenario::SpreadLaw: {
      std::vector<double> times;
      for (int i = 0; i <= 10; ++i) times.push_back(-3.0 + 0.6 * i);
      return {FamilyKind::Derivative, 2, std::move(times), 4096, 64.0};
    }
    case Scenario::Bounds:
      return {FamilyKind::Derivative, 2, {0.01, 0.03, 0.1, 0.3, 1.0, 3.0, 10.0, 30.0}, 8192, 512.0};
    case Scenario::Custom:
      return {FamilyKind::Gaussian, 0, {}, 4096, 64.0};
  }
  return {};
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "scenario",     "family",         "family.n",     "family.tau",     "family.a",
      "family.boost", "physics.hbar",   "physics.mass", "grid.n",         "grid.half_width",
      "times",        "output.dir",     "output.formats", "strict"};
  return keys;
}

}  // namespace

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::Fig1: return "fig1";
    case Scenario::Fig2: return "fig2";
    case Scenario::Fig3: return "fig3";
    case Scenario::Fig4: return "fig4";
    case Scenario::SpreadLaw: return "spread-law";
    case Scenario::Bounds: return "bounds";
    case Scenario::Custom: return "custom";
  }
  return "unknown";
}

std::string to_string(FamilyKind f) {
  switch (f) {
    case FamilyKind::Gaussian: return "gaussian";
    case FamilyKind::HermiteGauss: return "hermite-gauss";
    case FamilyKind::Derivative: return "derivative";
    case FamilyKind::Square: return "square";
  }
  return "unknown";
}

double ScenarioConfig::time_unit() const {
  if (family == FamilyKind::Square) return physics.mass * width * width / physics.hbar;
  return tau;
}

ScenarioConfig parse_config(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(line_no, "", "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, "", "missing key");
    bool known = false;
    for (const auto& k : known_keys()) known = known || k == key;
    if (!known) throw ConfigError(line_no, key, "unknown key");
    entries[key] = Entry{value, line_no};
  }

  const auto get = [&](const std::string& key) -> const Entry* {
    const auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };

  ScenarioConfig cfg;
  if (const Entry* e = get("scenario")) cfg.scenario = parse_scenario(*e);
  const Preset preset = preset_for(cfg.scenario);

  cfg.family = preset.family;
  if (const Entry* e = get("family")) cfg.family = parse_family(*e);
  cfg.order = (cfg.family == preset.family) ? preset.order : 0;
  if (const Entry* e = get("family.n")) {
    const long long n = parse_int("family.n", *e);
    const int limit = cfg.family == FamilyKind::Derivative ? kMaxDerivativeOrder : kMaxHermiteOrder;
    if (n < 0 || n > limit) {
      throw ConfigError(e->line, "family.n", "order must lie in [0, " + std::to_string(limit) + "]");
    }
    cfg.order = static_cast<int>(n);
  }
  if (const Entry* e = get("family.tau")) {
    cfg.tau = parse_double("family.tau", *e);
    if (!(cfg.tau > 0.0)) throw ConfigError(e->line, "family.tau", "must be positive");
  }
  if (const Entry* e = get("family.a")) {
    cfg.width = parse_double("family.a", *e);
    if (!(cfg.width > 0.0)) throw ConfigError(e->line, "family.a", "must be positive");
  }
  if (const Entry* e = get("family.boost")) {
    cfg.boost = parse_double("family.boost", *e);
    if (cfg.boost != 0.0 && cfg.family == FamilyKind::Square) {
      throw ConfigError(e->line, "family.boost", "not supported for the square family");
    }
  }
  if (const Entry* e = get("physics.hbar")) {
    cfg.physics.hbar = parse_double("physics.hbar", *e);
    if (!(cfg.physics.hbar > 0.0)) throw ConfigError(e->line, "physics.hbar", "must be positive");
  }
  if (const Entry* e = get("physics.mass")) {
    cfg.physics.mass = parse_double("physics.mass", *e);
    if (!(cfg.physics.mass > 0.0)) throw ConfigError(e->line, "physics.mass", "must be positive");
  }

  cfg.grid_n = preset.grid_n;
  if (const Entry* e = get("grid.n")) {
    const long long n = parse_int("grid.n", *e);
    if (n < 8 || (n & (n - 1)) != 0) {
      throw ConfigError(e->line, "grid.n", "must be a power of two and at least 8, got " + e->value);
    }
    cfg.grid_n = static_cast<Index>(n);
  }
  cfg.half_width = preset.half_width;
  if (const Entry* e = get("grid.half_width")) {
    cfg.half_width = parse_double("grid.half_width", *e);
    if (!(cfg.half_width > 0.0)) throw ConfigError(e->line, "grid.half_width", "must be positive");
  }

  std::vector<double> scaled = preset.times;
  if (const Entry* e = get("times")) {
    scaled.clear();
    for (const auto& item : split_list(e->value)) scaled.push_back(parse_double("times", Entry{item, e->line}));
    if (scaled.empty()) throw ConfigError(e->line, "times", "time list is empty");
  }
  if (scaled.empty()) throw ConfigError(0, "times", "time list is empty (required for custom scenarios)");
  const double unit = cfg.time_unit();
  for (double t : scaled) cfg.times.push_back(t * unit);

  if (const Entry* e = get("output.dir")) {
    if (e->value.empty()) throw ConfigError(e->line, "output.dir", "must not be empty");
    cfg.output_dir = e->value;
  }
  if (const Entry* e = get("output.formats")) {
    cfg.write_csv = false;
    cfg.write_svg = false;
    for (const auto& fmt : split_list(e->value)) {
      if (fmt == "csv") {
        cfg.write_csv = true;
      } else if (fmt == "svg") {
        cfg.write_svg = true;
      } else {
        throw ConfigError(e->line, "output.formats", "unknown format '" + fmt + "'");
      }
    }
    if (!cfg.write_csv && !cfg.write_svg) throw ConfigError(e->line, "output.formats", "no formats selected");
  }
  if (const Entry* e = get("strict")) cfg.strict = parse_bool("strict", *e);
  return cfg;
}

}  // namespace freepacket
