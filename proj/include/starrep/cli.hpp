#pragma once

// Batch commands over fixture documents. A run is fixed by its manifest;
// reports are a '#'-prefixed summary header followed by JSON.

#include <cstdint>

#include "starrep/io.hpp"

namespace starrep {

struct RunManifest {
  std::string command;
  std::string input;
  int order = 6;
  int degree_cap = kDefaultDegreeCap;
  std::uint64_t seed = 42;
  std::string output;
};

struct Invariant {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct Report {
  std::vector<std::string> summary;
  std::vector<Invariant> invariants;
  io::Json outputs = io::Json::object();

  bool pass() const;
  void check(std::string name, bool ok, std::string detail = "");
};

const std::vector<std::string>& command_names();
/// Fixture used when no input is given.
std::string default_fixture(const std::string& command);

/// Throws cli.UnknownCommand, cli.ParseError and module errors.
Report execute(const RunManifest& manifest, const io::Json& input);
std::string render(const RunManifest& manifest, const Report& report);

}  // namespace starrep
