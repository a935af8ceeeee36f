#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "triac/cli.hpp"

using namespace triac;
namespace fs = std::filesystem;

namespace {

// Scratch directory for files produced by these tests.
class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("triac-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

int count_lines(const std::string& text) {
  return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("generate writes one JSON object per root") {
  TempDir tmp;
  CliConfig config;
  config.command = CliConfig::Command::generate;
  config.system = System::e8;
  config.amplitude_mode = AmplitudeMode::cyclotomic;
  config.out = tmp.file("e8.jsonl");
  CHECK(run(config) == 0);

  std::string text = slurp(config.out);
  CHECK(count_lines(text) == 240);
  std::istringstream is(text);
  std::string first;
  std::getline(is, first);
  auto j = nlohmann::json::parse(first);
  CHECK(j["system"] == "e8");
  CHECK(j["family"] == "A");
  CHECK(j["n"] == 0);
  CHECK(j["mode"] == "exact");
  CHECK(j["coords"].size() == 4);
  CHECK(j["coords"][0].size() == 16);

  // Byte-identical across runs.
  config.out = tmp.file("e8-again.jsonl");
  CHECK(run(config) == 0);
  CHECK(slurp(config.out) == text);
}

TEST_CASE("generate rejects exact h4") {
  CliConfig config;
  config.command = CliConfig::Command::generate;
  config.system = System::h4;
  config.amplitude_mode = AmplitudeMode::cyclotomic;
  config.out = "/dev/null";
  CHECK(run(config) == 2);
}

TEST_CASE("verify exits 0 on both systems and writes a report") {
  TempDir tmp;
  CliConfig config;
  config.command = CliConfig::Command::verify;
  config.system = System::e8;
  config.format = "json";
  config.out = tmp.file("report.json");
  CHECK(run(config) == 0);
  auto report = nlohmann::json::parse(slurp(config.out));
  CHECK(report.size() > 20);
  for (const auto& row : report) CHECK(row["status"] == "pass");

  config.system = System::h4;
  config.format = "text";
  config.out = tmp.file("report.txt");
  CHECK(run(config) == 0);
  std::string text = slurp(config.out);
  CHECK(text.find("[PASS] h4.cardinality") != std::string::npos);
  CHECK(text.find("[FAIL]") == std::string::npos);
}

TEST_CASE("generate | verify round trip, including tamper detection") {
  TempDir tmp;
  CliConfig gen;
  gen.command = CliConfig::Command::generate;
  gen.system = System::e8;
  gen.amplitude_mode = AmplitudeMode::cyclotomic;
  gen.out = tmp.file("roots.jsonl");
  REQUIRE(run(gen) == 0);

  CliConfig verify;
  verify.command = CliConfig::Command::verify;
  verify.system = System::e8;
  verify.in = gen.out;
  verify.format = "text";
  verify.out = tmp.file("verify.txt");
  CHECK(run(verify) == 0);
  std::string text = slurp(verify.out);
  CHECK(text.find("[PASS] io.import-fidelity") != std::string::npos);

  // Corrupt one coordinate and expect a claim failure (exit 1).
  std::string payload = slurp(gen.out);
  auto pos = payload.find("\"-1/1\"");
  REQUIRE(pos != std::string::npos);
  payload.replace(pos, 6, "\"-3/1\"");
  std::ofstream(tmp.file("tampered.jsonl"), std::ios::binary) << payload;

  verify.in = tmp.file("tampered.jsonl");
  verify.out = tmp.file("verify-tampered.txt");
  CHECK(run(verify) == 1);
  std::string tampered = slurp(verify.out);
  CHECK(tampered.find("[FAIL] io.import-fidelity") != std::string::npos);

  // A wrong --system is also a failed check.
  verify.in = gen.out;
  verify.system = System::h4;
  verify.out = tmp.file("verify-wrong-system.txt");
  CHECK(run(verify) == 1);
}

TEST_CASE("project writes csv or json") {
  TempDir tmp;
  CliConfig config;
  config.command = CliConfig::Command::project;
  config.system = System::e8;
  config.out = tmp.file("proj.csv");
  CHECK(run(config) == 0);
  std::string text = slurp(config.out);
  CHECK(count_lines(text) == 241);
  CHECK(text.rfind("family,n,radius,phase_index,re,im\n", 0) == 0);

  config.format = "json";
  config.system = System::h4;
  config.out = tmp.file("proj.json");
  CHECK(run(config) == 0);
  auto parsed = nlohmann::json::parse(slurp(config.out));
  CHECK(parsed.size() == 120);

  config.format = "svg";
  CHECK(run(config) == 2);  // not a projection format
}

TEST_CASE("project accepts an imported root file") {
  TempDir tmp;
  CliConfig gen;
  gen.command = CliConfig::Command::generate;
  gen.system = System::h4;
  gen.out = tmp.file("h4.jsonl");
  REQUIRE(run(gen) == 0);

  CliConfig project;
  project.command = CliConfig::Command::project;
  project.system = System::h4;
  project.in = gen.out;
  project.out = tmp.file("h4.csv");
  CHECK(run(project) == 0);
  CHECK(count_lines(slurp(project.out)) == 121);

  project.in = tmp.file("missing.jsonl");
  CHECK(run(project) == 2);
}

TEST_CASE("render writes deterministic svg") {
  TempDir tmp;
  CliConfig config;
  config.command = CliConfig::Command::render;
  config.system = System::e8;
  config.style.guide_circles = true;
  config.out = tmp.file("fig.svg");
  CHECK(run(config) == 0);
  std::string svg = slurp(config.out);
  CHECK(svg.rfind("<?xml", 0) == 0);

  std::size_t points = 0;
  for (std::size_t pos = svg.find("class=\"pt\""); pos != std::string::npos;
       pos = svg.find("class=\"pt\"", pos + 1))
    ++points;
  CHECK(points == 240);

  config.out = tmp.file("fig2.svg");
  CHECK(run(config) == 0);
  CHECK(slurp(config.out) == svg);

  config.style.margin = 0.7;
  CHECK(run(config) == 2);
}

TEST_CASE("report runs everything") {
  TempDir tmp;
  CliConfig config;
  config.command = CliConfig::Command::report;
  config.format = "json";
  config.out = tmp.file("report.json");
  CHECK(run(config) == 0);
  auto report = nlohmann::json::parse(slurp(config.out));
  bool has_render_row = false;
  std::set<std::string> names;
  for (const auto& row : report) {
    CHECK(row["status"] == "pass");
    has_render_row = has_render_row || row["check"] == "render.determinism";
    CHECK(names.insert(row["check"].get<std::string>()).second);
  }
  CHECK(has_render_row);
}

TEST_CASE("tolerance overrides reach the checks") {
  TempDir tmp;
  CliConfig config;
  config.command = CliConfig::Command::verify;
  config.system = System::h4;
  config.tol.identity = 1e-30;  // unreachable by double arithmetic
  config.out = tmp.file("strict.txt");
  CHECK(run(config) == 1);
  std::string text = slurp(config.out);
  CHECK(text.find("[FAIL]") != std::string::npos);
  CHECK(text.find("tol=1e-30") != std::string::npos);
}
