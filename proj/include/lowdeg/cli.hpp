#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lowdeg/motion.hpp"

namespace lowdeg::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kValidationError = 2,
  kInconsistency = 3,
};

// Inputs of `generate FAMILY [params...]`. Expression options are parsed with
// the motion grammar and must not contain eps; empty `d` means the family default.
struct GenerateOptions {
  std::string family;
  std::vector<std::string> params;
  std::string r = "t - k", e = "j", h = "t - i";
  std::string q = "t - k", d, f = "1";
  std::string planar_h;
};

// Builds the named family. Throws PreconditionError for unknown families or bad parameters.
MotionPolynomial generate(const GenerateOptions& opts);

// Runs one command line (args[0] is the program name). `in` backs the "-" input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lowdeg::cli
