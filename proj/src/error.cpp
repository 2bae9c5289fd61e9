#include "traceid/error.hpp"

namespace traceid {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::OddSize: return "OddSize";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidCombination: return "InvalidCombination";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace traceid
