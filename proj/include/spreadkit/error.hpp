#pragma once

#include <stdexcept>
#include <string>

namespace spreadkit {

enum class Errc {
  NotPrime,
  DegreeOutOfRange,
  DivisionByZero,
  ZeroSpace,
  AmbientMismatch,
  MixedDimensions,
  NotASpread,
  ParameterError,
  SkeletonDistanceError,
  ShapeError,
  InconsistentSystem,
  TooLarge,
  FormatError,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace spreadkit
