#include "qcalc/spectral.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>

#include "qcalc/detail/accumulator.hpp"
#include "qcalc/error.hpp"

namespace qcalc {

namespace {

constexpr double kResolventRelTol = 32 * DBL_EPSILON;

bool is_numerically_real(const Quaternion& q, double eps) {
  return imag_norm(q) <= eps * (1.0 + norm(q));
}

}  // namespace

Spectrum spectrum_of(const Quaternion& q, double eps) {
  if (!(eps > 0.0)) throw Error(Errc::InvalidArgument, "eps_spec must be positive");
  if (is_numerically_real(q, eps)) return {Complex{q.w, 0.0}, Complex{q.w, 0.0}, true};
  const double v = imag_norm(q);
  return {Complex{q.w, v}, Complex{q.w, -v}, false};
}

bool same_spectrum(const Spectrum& a, const Spectrum& b, double tol) {
  const double scale = 1.0 + std::max(std::abs(a.s_plus), std::abs(b.s_plus));
  return std::abs(a.s_plus - b.s_plus) <= tol * scale && std::abs(a.s_minus - b.s_minus) <= tol * scale;
}

UnitImaginary UnitImaginary::from(const Quaternion& v) {
  if (v.w != 0.0) throw Error(Errc::InvalidArgument, "unit imaginary must have zero real part");
  const double n = imag_norm(v);
  if (n == 0.0) throw Error(Errc::InvalidArgument, "unit imaginary from the zero vector");
  return UnitImaginary(v / n);
}

Biquaternion resolvent(const Quaternion& q, Complex lambda) {
  const Complex d = lambda * lambda - 2.0 * lambda * q.w + norm_squared(q);
  const double a = std::abs(lambda);
  const double scale = a * a + 2.0 * a * std::abs(q.w) + norm_squared(q);
  if (std::abs(d) <= kResolventRelTol * scale)
    throw Error(Errc::SpectrumHit, "lambda lies in the spectrum of q");
  return (1.0 / d) * (Biquaternion(lambda) - Biquaternion(involution(q)));
}

UnitImaginary unit_imaginary_of(const Quaternion& q, double eps) {
  if (is_numerically_real(q, eps)) throw Error(Errc::RealQuaternion, "q has no imaginary direction");
  return UnitImaginary::from(q.imag());
}

IdempotentPair idempotents_of(const UnitImaginary& s) {
  const Biquaternion is{Quaternion{}, s.value()};
  return {0.5 * (Biquaternion(1.0) - is), 0.5 * (Biquaternion(1.0) + is)};
}

std::pair<Biquaternion, Biquaternion> spectral_project(const Quaternion& q, const Biquaternion& a) {
  const IdempotentPair iota = idempotents_of(unit_imaginary_of(q));
  return {iota.iota_plus * a, iota.iota_minus * a};
}

namespace {

// (1 / 2 pi i) \oint resolvent over one circle, trapezoidal with n nodes.
Biquaternion riesz_circle(const Quaternion& q, Complex center, double r, int n) {
  detail::BiquaternionAccumulator acc;
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n;
    const Complex offset = std::polar(r, theta);
    acc.add(offset * resolvent(q, center + offset));
  }
  return (1.0 / n) * acc.total();
}

}  // namespace

std::pair<Biquaternion, Biquaternion> projections_via_contour(const Quaternion& q, double r, int n_nodes) {
  if (n_nodes < 1) throw Error(Errc::InvalidArgument, "n_nodes must be positive");
  const Spectrum sp = spectrum_of(q);
  if (sp.is_real) throw Error(Errc::ContourTouchesSpectrum, "real quaternion: the two disks coincide");
  const double gap = sp.s_plus.imag();
  if (!(r > 0.0) || r >= gap)
    throw Error(Errc::ContourTouchesSpectrum, "radius must satisfy 0 < r < ||Im q||");
  return {riesz_circle(q, sp.s_plus, r, n_nodes), riesz_circle(q, sp.s_minus, r, n_nodes)};
}

RieszResult riesz_projections(const Quaternion& q, double tol, int max_nodes) {
  const Spectrum sp = spectrum_of(q);
  if (sp.is_real) throw Error(Errc::RealQuaternion, "real quaternion has the identity projection only");
  const double r = std::min(0.5, sp.s_plus.imag() / 2.0);
  int n = 64;
  auto prev = projections_via_contour(q, r, n);
  while (2 * n <= max_nodes) {
    n *= 2;
    auto next = projections_via_contour(q, r, n);
    const double diff = std::max(max_abs_component(next.first - prev.first),
                                 max_abs_component(next.second - prev.second));
    prev = next;
    if (diff < tol) return {prev.first, prev.second, n};
  }
  throw Error(Errc::NoConvergence, "Riesz projections did not settle");
}

}  // namespace qcalc
