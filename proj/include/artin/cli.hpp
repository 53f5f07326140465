#pragma once

#include <ostream>

namespace artin::cli {

// Exit codes of the command-line tool.
enum Exit : int {
  kOk = 0,
  kInvalidTrace = 1,
  kUsage = 2,
  kParse = 3,
  kOutOfScope = 4,
  kIndeterminate = 5,
  kNotIdentity = 10,
};

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace artin::cli
