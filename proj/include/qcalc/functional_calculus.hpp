#pragma once

#include <span>
#include <utility>

#include "qcalc/spectral.hpp"
#include "qcalc/stem_function.hpp"

namespace qcalc {

// F_H(q) = F(s+) iota_+ + F(s-) iota_-, values multiplied by the idempotents
// from the right. At a real q the value is F(Re q).
// Throws SpectrumOutsideDomain when sigma(q) is not inside F's domain.
Biquaternion fc_eval(const StemFunction& f, const Quaternion& q);

// Imaginary (external-i) part of F_H(q) small relative to 1 + ||F_H(q)||.
bool fc_is_quaternion(const StemFunction& f, const Quaternion& q, double tol = 1e-12);

// F_H(q) == 0 within tol.
bool fc_zero_set_test(const StemFunction& f, const Quaternion& q, double tol = 1e-12);

// ((F f)_H(q), F_H(q) f_H(q)) for a complex-valued f. Throws
// NotComplexValued when f has a quaternionic part on the sampled points.
std::pair<Biquaternion, Biquaternion> fc_module_law(const StemFunction& big_f, const StemFunction& f,
                                                    const Quaternion& q);

// sum_n a_n q^n with the coefficients on the left.
Quaternion fc_poly_eval(std::span<const Quaternion> coeffs, const Quaternion& q);

// Throws SpectrumOutsideDomain unless sigma(q) lies in the domain.
Spectrum require_spectrum_in(const PlaneDomain& domain, const Quaternion& q);

}  // namespace qcalc
