#pragma once

#include "kcontact/cli/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kc::cli {

struct Options {
  std::string command;
  std::string file;                        // .lie / .mor; unused by lattice
  std::optional<std::string> specialize;   // "p=<rational>"
  std::vector<int> degrees;                // empty: all applicable degrees
  std::optional<std::string> matrix;       // "a,b,c,d" for lattice
  std::optional<std::string> quotient;     // .lie with a symplectic form, for contact
};

const std::vector<std::string>& command_names();

// Never throws: failures become a report with exit code 1 (mathematical
// check failed) or 2 (input error).
Report run(const Options& opts);

}  // namespace kc::cli
