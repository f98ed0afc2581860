#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "starrep/cli.hpp"
#include "starrep/errors.hpp"

namespace fs = std::filesystem;

namespace {

// a bare fixture name resolves to the shipped file
std::string resolve_input(const std::string& input, const std::string& command) {
  if (input.empty()) return std::string(STARREP_FIXTURE_DIR) + "/" + starrep::default_fixture(command) + ".json";
  if (fs::exists(input)) return input;
  fs::path shipped = fs::path(STARREP_FIXTURE_DIR) / (input + ".json");
  if (input.find('/') == std::string::npos && fs::exists(shipped)) return shipped.string();
  return input;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact deformation quantization toolkit"};
  starrep::RunManifest m;
  std::string commands;
  for (const auto& c : starrep::command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", m.command, "one of: " + commands)->required();
  app.add_option("--order", m.order, "truncation order N")->capture_default_str();
  app.add_option("--degree-cap", m.degree_cap, "polynomial degree cap")->capture_default_str();
  app.add_option("--seed", m.seed, "RNG seed")->capture_default_str();
  app.add_option("--input", m.input, "fixture document or shipped fixture name");
  app.add_option("--output", m.output, "report path (default: stdout)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: cli.ParseError: " << e.what() << "\n";
    return 2;
  }

  try {
    m.input = resolve_input(m.input, m.command);
    auto report = starrep::execute(m, starrep::io::read_file(m.input));
    std::string text = starrep::render(m, report);
    if (m.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(m.output);
      if (!out) throw starrep::Error("cli.ParseError", "cannot write " + m.output);
      out << text;
      std::cout << text.substr(0, text.find("\n{")) << "\n";
    }
    return report.pass() ? 0 : 1;
  } catch (const starrep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
