#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcalc {

enum class Errc {
  ZeroDivision,
  SpectrumHit,
  RealQuaternion,
  ContourTouchesSpectrum,
  SpectrumNotEnclosed,
  NotSymmetric,
  OutOfDomain,
  SeriesDivergence,
  SpectrumOutsideDomain,
  DegenerateDomain,
  NotComplexValued,
  NoConvergence,
  DerivativeUnavailable,
  NotAnalytic,
  OutsideConvergenceDisk,
  StencilOutsideDomain,
  NotSliceHolomorphic,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

// All library failures are reported through this one exception type; the
// code identifies which precondition was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qcalc
