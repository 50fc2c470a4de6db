#pragma once

#include <iosfwd>
#include <string>

#include "cnct/error.hpp"
#include "cnct/family.hpp"
#include "cnct/structure.hpp"

namespace cnct {

// Read failure pinned to a 1-based line (0 when the file as a whole is at
// fault, e.g. a missing header). The kind names the violated rule.
class FormatError : public Error {
 public:
  FormatError(ErrorKind kind, int line, const std::string& message)
      : Error(kind, message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Structure files (.cnct):
//
//   n 4
//   # generators, one subset per line as 1-based indices
//   1 2
//   2 3 4
//
// Reading returns the structure generated by the listed sets. Writing emits
// the `n` line and then every member with at least two elements, one per
// line, in canonical order.
ConnectivityStructure read_structure(std::istream& in);
void write_structure(std::ostream& out, const ConnectivityStructure& k);

// Family files (.fam):
//
//   n 2
//   omega 2
//   p 1/2 1/2
//   x 0 1
//   x 0 1
//
// One `x` line per variable, in index order. Probabilities are integers or
// a/b fractions. Writing emits normalized value codes.
RandomFamily read_family(std::istream& in);
void write_family(std::ostream& out, const RandomFamily& phi);

}  // namespace cnct
