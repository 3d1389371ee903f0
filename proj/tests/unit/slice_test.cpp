#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "qcalc/error.hpp"
#include "qcalc/functional_calculus.hpp"
#include "qcalc/slice.hpp"

namespace {

using qcalc::Biquaternion;
using qcalc::Complex;
using qcalc::Errc;
using qcalc::PlaneDomain;
using qcalc::Quaternion;
using qcalc::StemFunction;
using qcalc::UnitImaginary;

template <class Fn>
void expect_errc(Errc code, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << qcalc::to_string(code);
  } catch (const qcalc::Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

void expect_bq_near(const Biquaternion& a, const Biquaternion& b, double tol) {
  EXPECT_LE(qcalc::max_abs_component(a - b), tol) << a << " vs " << b;
}

const PlaneDomain kDisk2 = PlaneDomain::disk(0.0, 2.0);
const UnitImaginary kJ = UnitImaginary::from(Quaternion::j());

qcalc::SliceFunction quaternion_map(Quaternion (*fn)(const Quaternion&), const PlaneDomain& d = kDisk2) {
  return qcalc::slice_function_of([fn](const Quaternion& q) { return Biquaternion(fn(q)); }, qcalc::saturate(d));
}

Quaternion square(const Quaternion& q) { return q * q; }
Quaternion slice_conjugate(const Quaternion& q) { return involution(q); }  // x - y s on each slice
Quaternion real_part(const Quaternion& q) { return Quaternion(q.w); }
Quaternion constant(const Quaternion&) { return Quaternion(1, 2, 3, 4); }

TEST(StandardSlices, FixedSet) {
  const auto& s = qcalc::standard_slices();
  ASSERT_EQ(s.size(), 5u);
  EXPECT_EQ(s[0].value(), Quaternion::j());
  EXPECT_EQ(s[1].value(), Quaternion::k());
  EXPECT_EQ(s[2].value(), Quaternion::l());
  for (const auto& u : s) EXPECT_NEAR(norm(u.value()), 1.0, 1e-15);
}

TEST(DbarS, Examples) {
  qtest::Gen g(121);
  for (int n = 0; n < 50; ++n) {
    const auto s = g.unit_imaginary();
    const double x = g.uniform(-1, 1), y = g.uniform(-1, 1);
    EXPECT_LT(qcalc::cstar_norm(qcalc::dbar_s(quaternion_map(square), x, y, s, 1e-5)), 1e-9);
    const Biquaternion anti = qcalc::dbar_s(quaternion_map(slice_conjugate), x, y, s, 1e-5);
    expect_bq_near(anti, Biquaternion(1.0), 1e-9);
    EXPECT_LT(qcalc::cstar_norm(qcalc::dbar_s(quaternion_map(constant), x, y, s, 1e-5)), 1e-15);
  }
}

TEST(DbarS, StencilMustStayInDomain) {
  expect_errc(Errc::StencilOutsideDomain,
              [] { (void)qcalc::dbar_s(quaternion_map(square), 1.99999, 0.0, kJ, 1e-4); });
  expect_errc(Errc::InvalidArgument, [] { (void)qcalc::dbar_s(quaternion_map(square), 0.0, 0.0, kJ, 0.0); });
}

TEST(DbarS, CauchyKernelIsRegular) {
  qtest::Gen g(122);
  const Complex zeta0(2.5, 0.7);
  const auto kernel = qcalc::slice_function_of(
      [zeta0](const Quaternion& q) { return qcalc::resolvent(q, zeta0); }, qcalc::saturate(kDisk2));
  const auto report = qcalc::check_slice_regular(kernel, 50);
  EXPECT_TRUE(report.pass) << report.max_residual;
  for (int n = 0; n < 30; ++n) {
    const double x = g.uniform(-1, 1), y = g.uniform(-1, 1);
    const auto s = g.unit_imaginary();
    const double coarse = qcalc::cstar_norm(qcalc::dbar_s(kernel, x, y, s, 1e-2));
    const double fine = qcalc::cstar_norm(qcalc::dbar_s(kernel, x, y, s, 1e-3));
    EXPECT_LT(fine, coarse / 50);  // O(h^2)
  }
}

TEST(CheckSliceRegular, Examples) {
  qtest::Gen g(123);
  const auto poly = StemFunction::polynomial(g.quaternion_coeffs(5), kDisk2);
  const auto ok = qcalc::check_slice_regular(qcalc::slice_function_of(poly), 50);
  EXPECT_TRUE(ok.pass);
  EXPECT_EQ(ok.samples, 250);
  EXPECT_DOUBLE_EQ(ok.h, qcalc::kDefaultDbarStep);
  const auto bad = qcalc::check_slice_regular(quaternion_map(real_part), 50);
  EXPECT_FALSE(bad.pass);
  EXPECT_NEAR(bad.max_residual, 0.5, 1e-9);
}

TEST(CheckSliceRegular, DeterministicUnderSeed) {
  const auto e = StemFunction::exp_series(PlaneDomain::disk(0.0, 3.0));
  const auto a = qcalc::check_slice_regular(qcalc::slice_function_of(e), 20, 1e-5, 1e-7, 9, 3);
  const auto b = qcalc::check_slice_regular(qcalc::slice_function_of(e), 20, 1e-5, 1e-7, 9, 3);
  EXPECT_EQ(a.max_residual, b.max_residual);
  EXPECT_EQ(a.samples, 160);
}

TEST(SliceFunction, WellDefinedUnderSignFlip) {
  qtest::Gen g(124);
  const auto f = qcalc::slice_function_of(StemFunction::polynomial(g.quaternion_coeffs(4), kDisk2));
  for (int n = 0; n < 100; ++n) {
    const auto s = g.unit_imaginary();
    const double x = g.uniform(-1, 1), y = g.uniform(-1, 1);
    EXPECT_EQ(f.eval(x, y, s), f.eval(x, -y, -s));
  }
}

TEST(RepresentationFormula, Examples) {
  const auto id = StemFunction::polynomial({0.0, 1.0}, kDisk2);
  const auto sides = qcalc::representation_formula(id, 0.0, 1.0, kJ);
  expect_bq_near(sides.lhs, Biquaternion::i(), 0.0);
  expect_bq_near(sides.rhs, Biquaternion::i(), 1e-16);

  qtest::Gen g(125);
  const auto f = StemFunction::polynomial(g.quaternion_coeffs(3), kDisk2);
  const auto real_point = qcalc::representation_formula(f, 0.7, 0.0, g.unit_imaginary());
  expect_bq_near(real_point.lhs, f(0.7), 0.0);
  expect_bq_near(real_point.rhs, f(0.7), 1e-15);

  const auto e = StemFunction::exp_series(PlaneDomain::disk(0.0, 4.0));
  for (int n = 0; n < 5; ++n) {
    const auto sides_e = qcalc::representation_formula(e, 0.0, std::numbers::pi, g.unit_imaginary());
    expect_bq_near(sides_e.lhs, Biquaternion(-1.0), 1e-14);
    expect_bq_near(sides_e.rhs, Biquaternion(-1.0), 1e-14);
  }
  expect_errc(Errc::OutOfDomain, [&] { (void)qcalc::representation_formula(id, 0.0, 3.0, kJ); });
}

TEST(RepresentationFormula, HoldsForNonStemFunctionsToo) {
  qtest::Gen g(126);
  for (int n = 0; n < 100; ++n) {
    std::vector<Biquaternion> coeffs;
    for (int m = 0; m < 4; ++m) coeffs.push_back(g.biquaternion());
    const auto f = StemFunction::polynomial(coeffs, kDisk2);
    const double x = g.uniform(-1, 1), y = g.uniform(-1, 1);
    for (int sign : {+1, -1}) {
      const auto sides = qcalc::representation_formula(f, x, y, g.unit_imaginary(), sign);
      EXPECT_LT(qcalc::cstar_norm(sides.lhs - sides.rhs), 1e-12);
    }
  }
}

TEST(Reconstruct, SquareFromSliceJ) {
  const auto psi = quaternion_map(square);
  const auto f = qcalc::reconstruct_stem_from_slice(psi, kJ, kDisk2);
  EXPECT_TRUE(f.declared_stem());
  EXPECT_TRUE(qcalc::verify_stem(f, 100, 1e-12));
  const auto sq = StemFunction::polynomial({0.0, 0.0, 1.0}, kDisk2);
  qtest::Gen g(127);
  for (const auto& s : {qcalc::standard_slices()[1], qcalc::standard_slices()[3], g.unit_imaginary()}) {
    for (int n = 0; n < 20; ++n) {
      const Quaternion q = qcalc::on_slice(g.uniform(-1, 1), g.uniform(-1, 1), s);
      expect_bq_near(qcalc::fc_eval(f, q), qcalc::fc_eval(sq, q), 1e-13);
    }
  }
}

TEST(Reconstruct, ExpFromSliceK) {
  const auto e = StemFunction::exp_series(PlaneDomain::disk(0.0, 3.0));
  const UnitImaginary k = UnitImaginary::from(Quaternion::k());
  const auto f = qcalc::reconstruct_stem_from_slice(qcalc::slice_function_of(e), k, e.domain());
  qtest::Gen g(128);
  for (int n = 0; n < 50; ++n) {
    const Quaternion q = qcalc::on_slice(g.uniform(-1.5, 1.5), g.uniform(-1.5, 1.5), g.unit_imaginary());
    EXPECT_LT(qcalc::cstar_norm(qcalc::fc_eval(f, q) - qcalc::fc_eval(e, q)), 1e-10);
  }
}

TEST(Reconstruct, IndependentOfSourceSlice) {
  const auto e = StemFunction::exp_series(PlaneDomain::disk(0.0, 3.0)) *
                 StemFunction::polynomial({Quaternion::k(), 1.0}, PlaneDomain::disk(0.0, 3.0));
  const auto psi = qcalc::slice_function_of(e);
  const auto a = qcalc::reconstruct_stem_from_slice(psi, kJ, e.domain());
  const auto b = qcalc::reconstruct_stem_from_slice(psi, qcalc::standard_slices()[4], e.domain());
  for (const Complex z : qcalc::halton_points(e.domain(), 64)) EXPECT_LT(qcalc::cstar_norm(a(z) - b(z)), 1e-10);
}

TEST(Reconstruct, RejectsNonHolomorphicSlice) {
  expect_errc(Errc::NotSliceHolomorphic, [] { (void)qcalc::reconstruct_stem_from_slice(quaternion_map(real_part), kJ, kDisk2); });
  expect_errc(Errc::NotSymmetric, [] {
    (void)qcalc::reconstruct_stem_from_slice(quaternion_map(square), kJ, PlaneDomain::disk(Complex(0, 0.5), 0.3));
  });
}

TEST(EquivalenceHarness, PassesForStemSpecs) {
  qtest::Gen g(129);
  for (int n = 0; n < 5; ++n) {
    const auto f = StemFunction::polynomial(g.quaternion_coeffs(g.integer(0, 6)), kDisk2);
    const auto r = qcalc::equivalence_harness(f, 20);
    EXPECT_TRUE(r.pass) << r.regular.max_residual << " " << r.max_roundtrip;
    EXPECT_EQ(r.slices.size(), 3u);
  }
  const auto e = qcalc::equivalence_harness(StemFunction::exp_series(PlaneDomain::disk(0.0, 3.0)), 20);
  EXPECT_TRUE(e.pass);
}

TEST(EquivalenceHarness, FlagsPerturbedSpecs) {
  qtest::Gen g(130);
  const auto f = StemFunction::polynomial(g.quaternion_coeffs(4), kDisk2) +
                 StemFunction::constant(1e-3 * Biquaternion::i(), kDisk2);
  const auto r = qcalc::equivalence_harness(f, 20);
  EXPECT_FALSE(r.pass);
  for (const auto& s : r.slices) EXPECT_FALSE(s.stem);
}

}  // namespace
