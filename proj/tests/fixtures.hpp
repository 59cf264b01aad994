#pragma once

#include "nilband/lie_algebra.hpp"

#include <cstdlib>
#include <string>

inline std::string fixture_path(const std::string& name) {
  const char* dir = std::getenv("NILBAND_FIXTURES");
  return std::string(dir ? dir : "fixtures") + "/" + name + ".json";
}

inline nilband::LieAlgebraSpec load_fixture(const std::string& name) {
  return nilband::parse_spec_file(fixture_path(name));
}
