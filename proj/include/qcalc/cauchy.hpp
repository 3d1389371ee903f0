#pragma once

#include <vector>

#include "qcalc/functional_calculus.hpp"

namespace qcalc {

struct Circle {
  Complex center;
  double radius = 0.0;
  int nodes = 64;
};

// Positively oriented circles bounding a Cauchy domain.
struct ContourSpec {
  std::vector<Circle> circles;

  // Throws InvalidArgument unless every circle has radius > 0, a power-of-two
  // node count >= 8, and the closed disks are pairwise disjoint.
  void validate() const;
};

inline constexpr double kDefaultCauchyTol = 1e-11;
inline constexpr int kDefaultMaxNodes = 1 << 14;

// Two circles about s+- of radius min(||Im q|| / 2, d / 2), or one circle about
// Re q of radius d / 2 for real q, where d is the distance from sigma(q) to
// the domain boundary. Throws SpectrumOutsideDomain or DegenerateDomain.
ContourSpec default_contour(const Quaternion& q, const PlaneDomain& domain, int nodes = 64);

struct CauchyResult {
  Biquaternion value;
  double error_estimate = 0.0;
  int nodes_used = 0;  // total quadrature nodes over all circles
  ContourSpec contour;  // with the final per-circle node counts
};

// (1 / 2 pi i) \oint F(zeta) (zeta - q)^-1 d zeta by the trapezoidal rule on each
// circle, doubling the node count (reusing earlier nodes) until two successive
// values differ by at most tol * max(1, ||value||) in the C*-norm.
CauchyResult cauchy_transform(const StemFunction& f, const Quaternion& q, const ContourSpec& contour,
                              double tol = kDefaultCauchyTol, int max_nodes = kDefaultMaxNodes);

// Same, on default_contour(q, f.domain()).
CauchyResult cauchy_transform(const StemFunction& f, const Quaternion& q, double tol = kDefaultCauchyTol);

// ||C[F](q) - F_H(q)|| with the transform on the default contour.
double check_spectral_equivalence(const StemFunction& f, const Quaternion& q, double tol = kDefaultCauchyTol);

// C[F^(n)](q).
Biquaternion extended_derivative(const StemFunction& f, int n, const Quaternion& q,
                                 double tol = kDefaultCauchyTol);

// sum_{n < terms} F^(n)(s0)/n! (q - s0)^n, coefficients on the left. Requires
// ||q - s0|| below the radius of a disk about s0 inside the domain on which F
// is analytic; throws OutsideConvergenceDisk otherwise.
Biquaternion taylor_eval(const StemFunction& f, double s0, const Quaternion& q, int terms);

inline Biquaternion taylor_at_zero(const StemFunction& f, const Quaternion& q, int terms) {
  return taylor_eval(f, 0.0, q, terms);
}

// Real point of the domain whose Taylor disk contains q with the widest
// margin, from Re q, 0 and a few points derived from the domain pieces.
double default_expansion_point(const StemFunction& f, const Quaternion& q);

// Radius of the disk about the real point s0 used by taylor_eval.
double taylor_radius(const StemFunction& f, double s0);

}  // namespace qcalc
