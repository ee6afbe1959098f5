#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hypersym {

enum class Errc {
  DuplicateDomain,
  DuplicateImage,
  LengthMismatch,
  PointOutOfRange,
  MixedSides,
  SizeMismatch,
  MixedDomainSizes,
  ExpansionTooLarge,
  ArityMismatch,
  ArityTooLarge,
  NotHomogeneous,
  DimensionTooLarge,
  DimensionMismatch,
  NotAGraph,
  NotAnAutomorphism,
  GroundSetTooLarge,
  DuplicateLabel,
  UnknownLabel,
  DuplicateEdge,
  EmptyEdge,
  ParseError,
  InvalidConfig,
};

std::string_view errc_name(Errc code);

// True for the errors that signal a configured cap was hit.
bool is_cap_error(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::size_t line = 0);

  Errc code() const noexcept { return code_; }
  // 1-based source line for parse errors, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  Errc code_;
  std::size_t line_;
};

}  // namespace hypersym
