#include "spinc/errors.hpp"

namespace spinc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::FormMismatch: return "FormMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotRotation: return "NotRotation";
    case Errc::NotSpecial: return "NotSpecial";
    case Errc::NotSpin: return "NotSpin";
    case Errc::StepTooCoarse: return "StepTooCoarse";
    case Errc::OpenLoop: return "OpenLoop";
    case Errc::OddOnly: return "OddOnly";
    case Errc::NotCentral: return "NotCentral";
    case Errc::NotScalar: return "NotScalar";
    case Errc::NotUnitary: return "NotUnitary";
    case Errc::Overflow: return "Overflow";
    case Errc::CutoffTooSmall: return "CutoffTooSmall";
    case Errc::UnsupportedGenerator: return "UnsupportedGenerator";
    case Errc::PathUnavailable: return "PathUnavailable";
    case Errc::ParseError: return "ParseError";
    case Errc::NonFinite: return "NonFinite";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace spinc
