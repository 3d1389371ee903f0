#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "generators.hpp"
#include "qcalc/error.hpp"
#include "qcalc/functional_calculus.hpp"

namespace {

using qcalc::Biquaternion;
using qcalc::Complex;
using qcalc::Errc;
using qcalc::PlaneDomain;
using qcalc::Quaternion;
using qcalc::StemFunction;

void expect_bq_near(const Biquaternion& a, const Biquaternion& b, double tol) {
  EXPECT_LE(qcalc::max_abs_component(a - b), tol) << a << " vs " << b;
}

const PlaneDomain kDisk3 = PlaneDomain::disk(0.0, 3.0);

// Horner with quaternion arithmetic only; an oracle independent of the
// spectral formula.
Quaternion horner(const std::vector<Biquaternion>& c, const Quaternion& q) {
  Quaternion acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + it->re;
  return acc;
}

Quaternion direct_power_sum(const std::vector<Biquaternion>& c, const Quaternion& q) {
  Quaternion acc{}, pw(1.0);
  for (const auto& a : c) {
    acc += a.re * pw;
    pw = pw * q;
  }
  return acc;
}

TEST(FcEval, Examples) {
  const auto sq = StemFunction::polynomial({0.0, 0.0, 1.0}, kDisk3);
  const Quaternion jk{0, 1, 1, 0};
  expect_bq_near(qcalc::fc_eval(sq, jk), Biquaternion(-2.0), 1e-14);
  expect_bq_near(qcalc::fc_eval(sq, jk), Biquaternion(jk * jk), 1e-14);

  const auto id = StemFunction::polynomial({0.0, 1.0}, kDisk3);
  qtest::Gen g(81);
  for (int n = 0; n < 100; ++n) {
    const Quaternion q = g.quaternion(1.4);
    expect_bq_near(qcalc::fc_eval(id, q), Biquaternion(q), 1e-15);
  }

  const auto e = StemFunction::exp_series(PlaneDomain::disk(0.0, 4.0));
  const Quaternion half_pi_j{0, std::numbers::pi / 2, 0, 0};
  const Biquaternion euler(Quaternion(std::cos(std::numbers::pi / 2), std::sin(std::numbers::pi / 2), 0, 0));
  expect_bq_near(qcalc::fc_eval(e, half_pi_j), euler, 1e-15);
}

TEST(FcEval, ExpMatchesEulerFormulaOnEverySlice) {
  const auto e = StemFunction::exp_series(PlaneDomain::disk(0.0, 4.0));
  qtest::Gen g(82);
  for (int n = 0; n < 200; ++n) {
    const Quaternion q = g.non_real_quaternion(3, 1e-3);
    const double v = qcalc::imag_norm(q);
    const Quaternion oracle = std::exp(q.w) * (Quaternion(std::cos(v)) + (std::sin(v) / v) * q.imag());
    expect_bq_near(qcalc::fc_eval(e, q), Biquaternion(oracle), 1e-13 * (1 + norm(oracle)));
  }
}

TEST(FcEval, RealArgumentUsesDirectValue) {
  const auto f = StemFunction::polynomial({Quaternion::j(), 2.0, Quaternion::k()}, kDisk3);
  expect_bq_near(qcalc::fc_eval(f, Quaternion(1.5)), f(1.5), 0.0);
}

TEST(FcEval, SpectrumOutsideDomain) {
  const auto f = StemFunction::polynomial({1.0, 0.0, 1.0}, PlaneDomain::disk(0.0, 1.0));
  try {
    (void)qcalc::fc_eval(f, Quaternion(3));
    FAIL();
  } catch (const qcalc::Error& e) {
    EXPECT_EQ(e.code(), Errc::SpectrumOutsideDomain);
  }
  EXPECT_THROW((void)qcalc::fc_eval(f, Quaternion::j()), qcalc::Error);  // sigma on the boundary
}

TEST(FcEval, QuaternionPolynomialsUseLeftCoefficients) {
  qtest::Gen g(83);
  for (int n = 0; n < 200; ++n) {
    const auto coeffs = g.quaternion_coeffs(g.integer(0, 8));
    const auto f = StemFunction::polynomial(coeffs, kDisk3);
    const Quaternion q = g.quaternion(1.2);
    const Quaternion oracle = direct_power_sum(coeffs, q);
    expect_bq_near(qcalc::fc_eval(f, q), Biquaternion(oracle), 1e-12 * (1 + norm(oracle)));
  }
}

TEST(FcEval, InvariantUnderSliceSignFlip) {
  const auto f = StemFunction::polynomial({Quaternion::j(), Quaternion(0, 0, 1, 2), 1.0}, kDisk3);
  qtest::Gen g(84);
  for (int n = 0; n < 100; ++n) {
    const auto s = g.unit_imaginary();
    const double x = g.uniform(-1, 1), y = g.uniform(0.1, 1.5);
    const Quaternion a = Quaternion(x) + y * s.value();
    const Quaternion b = Quaternion(x) + (-y) * (-s).value();
    EXPECT_EQ(qcalc::fc_eval(f, a), qcalc::fc_eval(f, b));
  }
}

TEST(FcEval, RealLinear) {
  qtest::Gen g(85);
  for (int n = 0; n < 100; ++n) {
    const auto f = StemFunction::polynomial(g.quaternion_coeffs(4), kDisk3);
    const auto h = StemFunction::exp_series(kDisk3) * StemFunction::polynomial({g.quaternion()}, kDisk3);
    const double alpha = g.uniform(-2, 2), beta = g.uniform(-2, 2);
    const auto combo = Biquaternion(alpha) * f + Biquaternion(beta) * h;
    const Quaternion q = g.quaternion(1.5);
    const Biquaternion lhs = qcalc::fc_eval(combo, q);
    const Biquaternion rhs = alpha * qcalc::fc_eval(f, q) + beta * qcalc::fc_eval(h, q);
    EXPECT_LE(qcalc::cstar_norm(lhs - rhs), 1e-12 * (1 + qcalc::cstar_norm(lhs)));
  }
}

TEST(FcIsQuaternion, Examples) {
  qtest::Gen g(86);
  const auto stem = StemFunction::polynomial(g.quaternion_coeffs(5), kDisk3);
  for (int n = 0; n < 100; ++n) EXPECT_TRUE(qcalc::fc_is_quaternion(stem, g.quaternion(1.5)));

  const auto ci = StemFunction::constant(Biquaternion::i(), kDisk3);
  EXPECT_FALSE(qcalc::fc_is_quaternion(ci, Quaternion::j()));

  const auto shifted = StemFunction::polynomial({Biquaternion::i(), 1.0}, kDisk3);
  const Quaternion q{0.3, 0.2, -0.5, 0.1};
  EXPECT_FALSE(qcalc::fc_is_quaternion(shifted, q));
  expect_bq_near(qcalc::fc_eval(shifted, q), Biquaternion(q, Quaternion(1.0)), 1e-15);
}

TEST(FcIsQuaternion, PerturbationIsDetected) {
  qtest::Gen g(87);
  const double eps = 1e-3;
  for (int n = 0; n < 20; ++n) {
    const auto stem = StemFunction::polynomial(g.quaternion_coeffs(4), kDisk3);
    const auto perturbed = stem + StemFunction::constant(eps * Biquaternion::i(), kDisk3);
    double worst_stem = 0, best_perturbed = 0;
    for (int m = 0; m < 25; ++m) {
      const Quaternion q = g.quaternion(1.5);
      worst_stem = std::max(worst_stem, qtest::im_part_norm(qcalc::fc_eval(stem, q)));
      best_perturbed = std::max(best_perturbed, qtest::im_part_norm(qcalc::fc_eval(perturbed, q)));
    }
    EXPECT_LT(worst_stem, 1e-12);
    EXPECT_GT(best_perturbed, eps / 2);
  }
}

TEST(FcZeroSet, Examples) {
  const auto f = StemFunction::polynomial({1.0, 0.0, 1.0}, kDisk3);
  EXPECT_TRUE(qcalc::fc_zero_set_test(f, Quaternion::j()));
  qtest::Gen g(88);
  for (int n = 0; n < 20; ++n) EXPECT_TRUE(qcalc::fc_zero_set_test(f, g.unit_imaginary().value()));
  EXPECT_FALSE(qcalc::fc_zero_set_test(f, Quaternion(0, 2, 0, 0)));
}

TEST(FcZeroSet, MatchesSpectralZeros) {
  const auto f = StemFunction::polynomial({1.0, 0.0, 1.0}, kDisk3);
  qtest::Gen g(89);
  for (int n = 0; n < 200; ++n) {
    const Quaternion q = g.quaternion(1.5);
    const auto s = qcalc::spectrum_of(q);
    const bool both_zero = qcalc::cstar_norm(f(s.s_plus)) < 1e-12 && qcalc::cstar_norm(f(s.s_minus)) < 1e-12;
    EXPECT_EQ(qcalc::fc_zero_set_test(f, q), both_zero);
  }
}

TEST(FcEval, VanishingOnSampledSetForcesZeroOnSpectra) {
  // (zeta^2 + 1) G vanishes exactly on the sphere of unit imaginaries; away
  // from it some sampled q exposes the nonzero factor.
  qtest::Gen g(93);
  const auto big_g = StemFunction::polynomial(g.quaternion_coeffs(3), kDisk3);
  const auto f = StemFunction::polynomial({1.0, 0.0, 1.0}, kDisk3) * big_g;
  double on_sphere = 0, off_sphere = 0;
  for (int n = 0; n < 50; ++n) {
    on_sphere = std::max(on_sphere, qcalc::cstar_norm(qcalc::fc_eval(f, g.unit_imaginary().value())));
    off_sphere = std::max(off_sphere, qcalc::cstar_norm(qcalc::fc_eval(f, g.quaternion(1.5))));
  }
  EXPECT_LT(on_sphere, 1e-13);
  EXPECT_GT(off_sphere, 1e-2);
}

TEST(ModuleLaw, Examples) {
  const auto big_k = StemFunction::constant(Quaternion::k(), kDisk3);
  const auto id = StemFunction::polynomial({0.0, 1.0}, kDisk3);
  const auto [lhs, rhs] = qcalc::fc_module_law(big_k, id, Quaternion::j());
  expect_bq_near(lhs, Biquaternion(-Quaternion::l()), 1e-15);
  expect_bq_near(rhs, Biquaternion(-Quaternion::l()), 1e-15);

  qtest::Gen g(90);
  for (int n = 0; n < 50; ++n) {
    const Quaternion q = g.quaternion(1.5);
    const auto [a, b] = qcalc::fc_module_law(id, id, q);
    expect_bq_near(a, Biquaternion(q * q), 1e-14);
    expect_bq_near(b, Biquaternion(q * q), 1e-14);
    const auto big = StemFunction::polynomial(g.quaternion_coeffs(3), kDisk3);
    const auto [c, d] = qcalc::fc_module_law(big, StemFunction::constant(1.0, kDisk3), q);
    expect_bq_near(c, qcalc::fc_eval(big, q), 1e-14);
    expect_bq_near(d, qcalc::fc_eval(big, q), 1e-14);
  }
}

TEST(ModuleLaw, ComplexFunctionsCommute) {
  qtest::Gen g(91);
  for (int n = 0; n < 100; ++n) {
    std::vector<Biquaternion> fc, gc;
    for (int m = 0; m < 4; ++m) {
      fc.emplace_back(g.complex());
      gc.emplace_back(g.complex());
    }
    const auto f = StemFunction::polynomial(fc, kDisk3);
    const auto h = StemFunction::polynomial(gc, kDisk3);
    const Quaternion q = g.quaternion(1.5);
    const Biquaternion fh = qcalc::fc_eval(f, q) * qcalc::fc_eval(h, q);
    const Biquaternion hf = qcalc::fc_eval(h, q) * qcalc::fc_eval(f, q);
    const Biquaternion prod = qcalc::fc_eval(f * h, q);
    const double scale = 1 + qcalc::cstar_norm(prod);
    EXPECT_LE(qcalc::cstar_norm(fh - prod), 1e-11 * scale);
    EXPECT_LE(qcalc::cstar_norm(hf - prod), 1e-11 * scale);
  }
}

TEST(ModuleLaw, RejectsQuaternionValuedRightFactor) {
  const auto id = StemFunction::polynomial({0.0, 1.0}, kDisk3);
  const auto jf = StemFunction::polynomial({Quaternion::j()}, kDisk3);
  try {
    (void)qcalc::fc_module_law(id, jf, Quaternion(0.1, 0.2, 0.3, 0.4));
    FAIL();
  } catch (const qcalc::Error& e) {
    EXPECT_EQ(e.code(), Errc::NotComplexValued);
  }
}

TEST(PolyEval, Examples) {
  const std::vector<Quaternion> k{0.0, Quaternion::k()};
  EXPECT_EQ(qcalc::fc_poly_eval(k, Quaternion::j()), -Quaternion::l());
  const std::vector<Quaternion> five{5.0};
  EXPECT_EQ(qcalc::fc_poly_eval(five, Quaternion(0.3, 1, 2, 3)), Quaternion(5));
  const std::vector<Quaternion> one_plus_sq{1.0, 0.0, 1.0};
  EXPECT_EQ(qcalc::fc_poly_eval(one_plus_sq, Quaternion::j()), Quaternion(0));
}

TEST(PolyEval, AgreesWithSpectralRoute) {
  qtest::Gen g(92);
  for (int n = 0; n < 200; ++n) {
    const auto coeffs = g.quaternion_coeffs(g.integer(0, 8));
    std::vector<Quaternion> quat;
    for (const auto& c : coeffs) quat.push_back(c.re);
    const Quaternion q = g.quaternion(1.3);
    const Quaternion direct = qcalc::fc_poly_eval(quat, q);
    expect_bq_near(Biquaternion(direct), Biquaternion(horner(coeffs, q)), 1e-13 * (1 + norm(direct)));
    const Biquaternion spectral = qcalc::fc_eval(StemFunction::polynomial(coeffs, kDisk3), q);
    EXPECT_LE(qcalc::cstar_norm(spectral - Biquaternion(direct)), 1e-12 * (1 + norm(direct)));
  }
}

}  // namespace
