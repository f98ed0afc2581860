#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "starrep/errors.hpp"
#include "starrep/fixtures.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Writes the shipped fixture documents"};
  std::string dir = STARREP_FIXTURE_DIR;
  app.add_option("--dir", dir, "target directory");
  CLI11_PARSE(app, argc, argv);
  for (const auto& name : starrep::fixture_names()) {
    std::ofstream out(dir + "/" + name + ".json");
    if (!out) {
      std::cerr << "cannot write " << dir << "/" << name << ".json\n";
      return 2;
    }
    out << starrep::make_fixture(name).dump(2) << "\n";
    std::cout << name << "\n";
  }
  return 0;
}
