#include "freepacket/cli.hpp"

#include "freepacket/config.hpp"
#include "freepacket/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace freepacket {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free wave-packet evolution scenarios"};
  app.name("freepacket");
  std::string config_path;
  std::string scenario;
  std::string out_dir;
  bool strict = false;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--scenario", scenario, "fig1 | fig2 | fig3 | fig4 | spread-law | bounds | custom");
  app.add_option("--out", out_dir, "output directory");
  app.add_flag("--strict", strict, "treat grid-sizing warnings as errors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "freepacket: " << e.what() << '\n';
    return kExitConfigError;
  }

  std::string text;
  if (!config_path.empty()) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
      err << "freepacket: cannot read config file " << config_path << '\n';
      return kExitConfigError;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    if (!text.empty() && text.back() != '\n') text += '\n';
  }
  // Flags are appended as later entries, which take precedence.
  if (!scenario.empty()) text += "scenario = " + scenario + "\n";
  if (!out_dir.empty()) text += "output.dir = " + out_dir + "\n";
  if (strict) text += "strict = true\n";

  ScenarioConfig cfg;
  try {
    cfg = parse_config(text);
  } catch (const ConfigError& e) {
    err << "freepacket: config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  const auto warnings = grid_warnings(cfg);
  for (const auto& w : warnings) err << "freepacket: warning: " << w << '\n';
  if (cfg.strict && !warnings.empty()) {
    err << "freepacket: aborting, warnings are errors in strict mode\n";
    return kExitStrictWarning;
  }

  try {
    const ScenarioReport report = run_scenario(cfg);
    for (const auto& f : report.files) out << f.string() << '\n';
  } catch (const std::exception& e) {
    err << "freepacket: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitOk;
}

}  // namespace freepacket
