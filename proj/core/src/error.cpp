#include "cnct/error.hpp"

namespace cnct {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGround: return "InvalidGround";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotOverlapping: return "NotOverlapping";
    case ErrorKind::NotGlobal: return "NotGlobal";
    case ErrorKind::GroundMismatch: return "GroundMismatch";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ProbSumNotOne: return "ProbSumNotOne";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NegativeProbability: return "NegativeProbability";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace cnct
