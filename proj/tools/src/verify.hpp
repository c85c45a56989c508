#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace nidxcli {

struct SuiteResult {
  bool pass = false;
  std::vector<std::string> lines;  // one line per check group, text mode
  nlohmann::json details;          // same content for json mode
};

// name in {lemma1, minimax, theorem3, sandwich}; grid is the brute-force
// resolution used by the sandwich suite.
SuiteResult run_verify_suite(const std::string& name, int grid);

}  // namespace nidxcli
