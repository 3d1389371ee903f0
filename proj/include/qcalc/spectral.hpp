#pragma once

#include <utility>

#include "qcalc/biquaternion.hpp"

namespace qcalc {

inline constexpr double kDefaultSpectralEps = 1e-12;

// Eigenvalues Re q +- i ||Im q|| of a quaternion viewed inside H + iH.
struct Spectrum {
  Complex s_plus;
  Complex s_minus;
  bool is_real = false;
};

// ||Im q|| <= eps * (1 + ||q||) counts as real; then s_plus == s_minus == Re q.
Spectrum spectrum_of(const Quaternion& q, double eps = kDefaultSpectralEps);

// Eigenvalues agree to tol relative to 1 + |s_+|.
bool same_spectrum(const Spectrum& a, const Spectrum& b, double tol = kDefaultSpectralEps);

// Purely imaginary quaternion of unit norm; squares to -1.
class UnitImaginary {
 public:
  // Normalizes the imaginary part of v; throws InvalidArgument if v has a
  // real part or a vanishing imaginary part.
  static UnitImaginary from(const Quaternion& v);

  const Quaternion& value() const { return s_; }
  UnitImaginary operator-() const { return UnitImaginary(-s_); }

  operator const Quaternion&() const { return s_; }  // NOLINT(google-explicit-constructor)

 private:
  explicit UnitImaginary(const Quaternion& s) : s_(s) {}
  Quaternion s_;
};

struct IdempotentPair {
  Biquaternion iota_plus;
  Biquaternion iota_minus;
};

// (Lambda - q)^-1 = (lambda^2 - 2 lambda Re q + ||q||^2)^-1 (lambda - q*).
// Throws SpectrumHit when lambda is (numerically) an eigenvalue of q.
Biquaternion resolvent(const Quaternion& q, Complex lambda);

// Im q / ||Im q||; throws RealQuaternion when q is numerically real.
UnitImaginary unit_imaginary_of(const Quaternion& q, double eps = kDefaultSpectralEps);

// iota_+- = (1 -+ i s) / 2.
IdempotentPair idempotents_of(const UnitImaginary& s);

// (P+ a, P- a) = (iota_+ a, iota_- a) for the eigen-idempotents of q.
// Throws RealQuaternion for real q, whose only spectral projection is the identity.
std::pair<Biquaternion, Biquaternion> spectral_project(const Quaternion& q, const Biquaternion& a);

// Riesz projections (1 / 2 pi i) \oint_{|zeta - s+-| = r} (zeta - q)^-1 d zeta by the
// trapezoidal rule with n_nodes per circle. Requires 0 < r < ||Im q||.
std::pair<Biquaternion, Biquaternion> projections_via_contour(const Quaternion& q, double r, int n_nodes);

struct RieszResult {
  Biquaternion p_plus;
  Biquaternion p_minus;
  int nodes = 0;
};

// Default Riesz evaluation: radius min(0.5, ||Im q|| / 2), 64 nodes doubled
// until successive results differ by less than tol componentwise.
RieszResult riesz_projections(const Quaternion& q, double tol = 1e-12, int max_nodes = 1 << 14);

}  // namespace qcalc
