#pragma once

#include <fstream>
#include <string>

#include "groth/json_io.hpp"

namespace testing {

inline groth::json load_fixture(const std::string& name) {
  std::ifstream in(std::string(GROTH_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return groth::json::parse(in);
}

inline groth::Tableau D(const std::string& diagram) { return groth::parse_diagram(diagram); }

}  // namespace testing
