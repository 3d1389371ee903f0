#include "qcalc/error.hpp"

namespace qcalc {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroDivision: return "ZeroDivision";
    case Errc::SpectrumHit: return "SpectrumHit";
    case Errc::RealQuaternion: return "RealQuaternion";
    case Errc::ContourTouchesSpectrum: return "ContourTouchesSpectrum";
    case Errc::SpectrumNotEnclosed: return "SpectrumNotEnclosed";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::SeriesDivergence: return "SeriesDivergence";
    case Errc::SpectrumOutsideDomain: return "SpectrumOutsideDomain";
    case Errc::DegenerateDomain: return "DegenerateDomain";
    case Errc::NotComplexValued: return "NotComplexValued";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::DerivativeUnavailable: return "DerivativeUnavailable";
    case Errc::NotAnalytic: return "NotAnalytic";
    case Errc::OutsideConvergenceDisk: return "OutsideConvergenceDisk";
    case Errc::StencilOutsideDomain: return "StencilOutsideDomain";
    case Errc::NotSliceHolomorphic: return "NotSliceHolomorphic";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qcalc
