#include "hypersym/errors.hpp"

namespace hypersym {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DuplicateDomain: return "DuplicateDomain";
    case Errc::DuplicateImage: return "DuplicateImage";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::PointOutOfRange: return "PointOutOfRange";
    case Errc::MixedSides: return "MixedSides";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::MixedDomainSizes: return "MixedDomainSizes";
    case Errc::ExpansionTooLarge: return "ExpansionTooLarge";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::ArityTooLarge: return "ArityTooLarge";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotAGraph: return "NotAGraph";
    case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
    case Errc::GroundSetTooLarge: return "GroundSetTooLarge";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::EmptyEdge: return "EmptyEdge";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

bool is_cap_error(Errc code) {
  switch (code) {
    case Errc::ExpansionTooLarge:
    case Errc::ArityTooLarge:
    case Errc::DimensionTooLarge:
    case Errc::GroundSetTooLarge:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& what, std::size_t line)
    : std::runtime_error(what), code_(code), line_(line) {}

}  // namespace hypersym
