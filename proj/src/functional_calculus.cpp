#include "qcalc/functional_calculus.hpp"

#include <cmath>

#include "qcalc/error.hpp"

namespace qcalc {

namespace {

constexpr double kCentralityTol = 1e-12;

double quaternionic_part(const Biquaternion& a) {
  return std::hypot(imag_norm(a.re), imag_norm(a.im));
}

}  // namespace

Spectrum require_spectrum_in(const PlaneDomain& domain, const Quaternion& q) {
  const Spectrum sp = spectrum_of(q);
  if (!domain.contains(sp.s_plus) || !domain.contains(sp.s_minus))
    throw Error(Errc::SpectrumOutsideDomain, "spectrum of q is not inside the domain");
  return sp;
}

Biquaternion fc_eval(const StemFunction& f, const Quaternion& q) {
  const Spectrum sp = require_spectrum_in(f.domain(), q);
  if (sp.is_real) return f(sp.s_plus);
  const IdempotentPair iota = idempotents_of(unit_imaginary_of(q));
  return f(sp.s_plus) * iota.iota_plus + f(sp.s_minus) * iota.iota_minus;
}

bool fc_is_quaternion(const StemFunction& f, const Quaternion& q, double tol) {
  const Biquaternion v = fc_eval(f, q);
  return cstar_norm(Biquaternion(v.im)) <= tol * (1.0 + cstar_norm(v));
}

bool fc_zero_set_test(const StemFunction& f, const Quaternion& q, double tol) {
  return cstar_norm(fc_eval(f, q)) <= tol;
}

std::pair<Biquaternion, Biquaternion> fc_module_law(const StemFunction& big_f, const StemFunction& f,
                                                    const Quaternion& q) {
  const Spectrum sp = require_spectrum_in(f.domain(), q);
  std::vector<Complex> probes{sp.s_plus, sp.s_minus};
  for (const Complex z : halton_points(f.domain(), 16)) probes.push_back(z);
  for (const Complex z : probes) {
    const Biquaternion v = f(z);
    if (quaternionic_part(v) > kCentralityTol * (1.0 + cstar_norm(v)))
      throw Error(Errc::NotComplexValued, "f must take values in the embedded complex field");
  }
  const StemFunction product = StemFunction::product({big_f, f}, big_f.domain());
  return {fc_eval(product, q), fc_eval(big_f, q) * fc_eval(f, q)};
}

Quaternion fc_poly_eval(std::span<const Quaternion> coeffs, const Quaternion& q) {
  Quaternion acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * q + *it;
  return acc;
}

}  // namespace qcalc
