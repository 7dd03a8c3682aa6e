#pragma once

#include <string>
#include <vector>

namespace ricci::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kMalformedInput = 2,
  kNotAnEdge = 3,
  kNotApplicable = 4,
  kVerificationMismatch = 5,
};

struct Outcome {
  int code = kOk;
  std::string out;  // written to stdout only when code == kOk
  std::string err;
};

/// Parses argv (without the program name) and runs one subcommand.
Outcome run(const std::vector<std::string>& args);

}  // namespace ricci::cli
