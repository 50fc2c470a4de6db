#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cnct::cli {

enum class Verb {
  Generate,
  Irreducibles,
  Components,
  Sum,
  Realize,
  Analyze,
  Tensor,
  Wedge,
  Enumerate,
  Verify,
  Minimize,
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitVerifyFailed = 2;

// Parses `args` (without the program name) and runs the command. Input paths
// and the output path accept "-" for the standard streams. Returns 0 on
// success, 1 after a one-line diagnostic on parse or validation errors, 2
// when `verify` finds a failing structure.
int run(const std::vector<std::string>& args, Streams streams);

}  // namespace cnct::cli
