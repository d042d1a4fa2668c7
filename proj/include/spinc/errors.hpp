#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinc {

enum class Errc {
  FormMismatch,
  ShapeMismatch,
  NotRotation,
  NotSpecial,
  NotSpin,
  StepTooCoarse,
  OpenLoop,
  OddOnly,
  NotCentral,
  NotScalar,
  NotUnitary,
  Overflow,
  CutoffTooSmall,
  UnsupportedGenerator,
  PathUnavailable,
  ParseError,
  NonFinite,
  UnknownSuite,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Exception carrying one of the named failure modes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace spinc
