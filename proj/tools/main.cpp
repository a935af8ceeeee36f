#include <string>

#include <CLI11.hpp>

#include "triac/cli.hpp"

namespace {

void add_common_flags(CLI::App* cmd, triac::CliConfig& config) {
  cmd->add_option("--tol-identity", config.tol.identity,
                  "tolerance for double-precision identities")
      ->capture_default_str();
  cmd->add_option("--tol-residual", config.tol.residual,
                  "tolerance for residual and census checks")
      ->capture_default_str();
  cmd->add_option("--tol-membership", config.tol.membership,
                  "tolerance for numeric point matching and phase snapping")
      ->capture_default_str();
  cmd->add_option("--tol-radius", config.tol.radius_pin,
                  "tolerance for pinned projection radii")
      ->capture_default_str();
  cmd->add_option("-o,--out", config.out, "output file (default: stdout)");
}

void add_system_flag(CLI::App* cmd, triac::CliConfig& config) {
  cmd->add_option_function<std::string>(
         "--system",
         [&config](const std::string& v) {
           config.system = triac::system_from_string(v);
         },
         "root system: e8 or h4")
      ->check(CLI::IsMember({"e8", "h4"}))
      ->default_str("e8");
}

void add_amplitude_flag(CLI::App* cmd, triac::CliConfig& config) {
  cmd->add_option_function<std::string>(
         "--amplitude-mode",
         [&config](const std::string& v) {
           config.amplitude_mode = v == "cyclotomic"
                                       ? triac::AmplitudeMode::cyclotomic
                                       : triac::AmplitudeMode::surd;
         },
         "amplitude mode: surd (unit norm, floats) or cyclotomic (exact)")
      ->check(CLI::IsMember({"surd", "cyclotomic"}))
      ->default_str("surd");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "triac: exact construction, verification and rendering of the E8 and "
      "H4 root systems in triacontagonal coordinates"};
  app.require_subcommand(1);

  triac::CliConfig config;

  auto* generate = app.add_subcommand(
      "generate", "write the root list as JSON lines");
  add_system_flag(generate, config);
  add_amplitude_flag(generate, config);
  add_common_flags(generate, config);

  auto* verify = app.add_subcommand(
      "verify", "run the full verification suite for one system");
  add_system_flag(verify, config);
  add_common_flags(verify, config);
  verify->add_option("--in", config.in,
                     "roots JSON-lines file to check against in-process "
                     "generation ('-' reads stdin)");
  verify->add_option("--format", config.format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* project = app.add_subcommand(
      "project", "write the first-coordinate projection");
  add_system_flag(project, config);
  add_amplitude_flag(project, config);
  add_common_flags(project, config);
  project->add_option("--in", config.in, "roots JSON-lines file to project");
  project->add_option("--format", config.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* render = app.add_subcommand(
      "render", "render the triacontagonal projection as SVG");
  add_system_flag(render, config);
  add_amplitude_flag(render, config);
  add_common_flags(render, config);
  render->add_option("--in", config.in, "roots JSON-lines file to render");
  render->add_option("--size", config.style.canvas_size, "canvas size, px")
      ->capture_default_str();
  render->add_option("--point-radius", config.style.point_radius,
                     "point radius, px")
      ->capture_default_str();
  render->add_option("--margin", config.style.margin, "margin fraction")
      ->capture_default_str();
  render
      ->add_option_function<std::string>(
          "--colors",
          [&config](const std::string& v) {
            config.style.scheme = triac::color_scheme_from_string(v);
          },
          "color scheme")
      ->check(CLI::IsMember({"by-family", "by-radius", "monochrome"}))
      ->default_str("by-family");
  render->add_option("--background", config.style.background,
                     "background color")
      ->capture_default_str();
  render->add_flag("--guide-circles", config.style.guide_circles,
                   "draw one guide circle per radius class");

  auto* report = app.add_subcommand(
      "report", "run every check for both systems and summarize");
  add_common_flags(report, config);
  report->add_option("--format", config.format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
  }

  if (generate->parsed()) config.command = triac::CliConfig::Command::generate;
  if (verify->parsed()) config.command = triac::CliConfig::Command::verify;
  if (project->parsed()) config.command = triac::CliConfig::Command::project;
  if (render->parsed()) config.command = triac::CliConfig::Command::render;
  if (report->parsed()) config.command = triac::CliConfig::Command::report;

  return triac::run(config);
}
