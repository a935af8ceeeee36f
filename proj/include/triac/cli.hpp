#pragma once

#include <string>

#include "triac/render.hpp"
#include "triac/roots.hpp"
#include "triac/tolerances.hpp"

namespace triac {

// Parsed command-line configuration. run() validates cross-field rules
// (notably: exact cyclotomic coordinates exist only for E8).
struct CliConfig {
  enum class Command { generate, verify, project, render, report };

  Command command = Command::report;
  System system = System::e8;
  AmplitudeMode amplitude_mode = AmplitudeMode::surd;
  std::string out;     // output path; empty = stdout
  std::string in;      // optional roots JSON-lines input; "-" = stdin
  std::string format;  // empty = per-command default
  Tolerances tol;
  RenderStyle style;
};

// Exit codes: 0 = success / all checks pass, 1 = a mathematical claim
// failed, 2 = usage or I/O error.
int run(const CliConfig& config);

}  // namespace triac
