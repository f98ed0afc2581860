#pragma once

// The shipped fixture documents, built from the in-code models. The files
// under fixtures/ are these documents written at order 6.

#include "starrep/io.hpp"

namespace starrep {

inline constexpr int kFixtureOrder = 6;

std::vector<std::string> fixture_names();
/// Throws cli.ParseError for an unknown name.
io::Json make_fixture(const std::string& name);

}  // namespace starrep
