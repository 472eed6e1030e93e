#ifndef PENTHEX_ERROR_HPP
#define PENTHEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace penthex {

enum class Err {
  BadDigit,
  EmptyCode,
  BadBend,
  NotApplicable,
  OverlappingBlocks,
  InconsistentRotation,
  NotTwoConnected,
  BadFaceLength,
  BadDegree,
  NotFiveFace,
  NotOneBend,
  PathNotIncident,
  AnchorMismatch,
  Inconsistent,
  Unsupported,
  Internal,
};

const char* err_name(Err e);

struct Error : std::runtime_error {
  Err kind;
  Error(Err k, const std::string& msg)
      : std::runtime_error(std::string(err_name(k)) + ": " + msg), kind(k) {}
};

}  // namespace penthex

#endif
