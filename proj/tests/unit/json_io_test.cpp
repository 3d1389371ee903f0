#include <gtest/gtest.h>

#include "generators.hpp"
#include "qcalc/error.hpp"
#include "qcalc/json_io.hpp"

namespace {

using qcalc::Biquaternion;
using qcalc::Complex;
using qcalc::Json;
using qcalc::PlaneDomain;
using qcalc::Quaternion;
using qcalc::StemFunction;

qcalc::Errc parse_error_code(const std::string& text) {
  try {
    (void)qcalc::stem_function_from_json(Json::parse(text));
  } catch (const qcalc::Error& e) {
    return e.code();
  }
  return qcalc::Errc::InvalidArgument;  // no error: reported as a mismatch by the caller
}

TEST(JsonIo, BiquaternionLayout) {
  const Biquaternion a(Quaternion(1, 2, 3, 4), Quaternion(5, 6, 7, 8));
  EXPECT_EQ(qcalc::to_json(a).dump(), "[1.0,2.0,3.0,4.0,5.0,6.0,7.0,8.0]");
  EXPECT_EQ(qcalc::biquaternion_from_json(qcalc::to_json(a)), a);
  EXPECT_EQ(qcalc::biquaternion_from_json(Json::parse("[1,2,3,4]")), Biquaternion(Quaternion(1, 2, 3, 4)));
  EXPECT_EQ(qcalc::biquaternion_from_json(Json::parse("2.5")), Biquaternion(2.5));
  EXPECT_EQ(qcalc::to_json(Biquaternion(Quaternion(-0.0, 0, 0, 0))).dump(), "[0.0,0.0,0.0,0.0,0.0,0.0,0.0,0.0]");
}

TEST(JsonIo, SpectrumLayout) {
  const auto j = qcalc::to_json(qcalc::spectrum_of(Quaternion::j()));
  EXPECT_EQ(j.dump(), R"({"is_real":false,"s_minus":[0.0,-1.0],"s_plus":[0.0,1.0]})");
}

TEST(JsonIo, RoundTripsSpecs) {
  qtest::Gen g(141);
  const PlaneDomain d({qcalc::Disk{0.0, 2.0}, qcalc::Rect{-3, 3, -0.5, 0.5}});
  const auto f = StemFunction::sum({StemFunction::polynomial(g.quaternion_coeffs(3), d),
                                    StemFunction::product({StemFunction::exp_series(d, 20),
                                                           StemFunction::resolvent_kernel(Complex(4, 1), d, 2, Quaternion::k())},
                                                          d)},
                                   d);
  const Json j = qcalc::to_json(f);
  const auto back = qcalc::stem_function_from_json(j);
  EXPECT_EQ(qcalc::to_json(back), j);
  for (const Complex z : qcalc::halton_points(d, 32)) EXPECT_EQ(back(z), f(z));
}

TEST(JsonIo, InfiniteRadiusIsNull) {
  const auto e = StemFunction::exp_series(PlaneDomain::disk(0.0, 3.0), 5);
  EXPECT_TRUE(qcalc::to_json(e).at("radius").is_null());
}

TEST(JsonIo, NamedSeries) {
  const auto f = qcalc::stem_function_from_json(Json::parse(
      R"({"kind":"power_series","named":"geometric","terms":50,"domain":{"pieces":[{"disk":{"center":[0,0],"radius":1}}]}})"));
  EXPECT_NEAR(f(0.5).re.w, 2.0, 1e-14);
}

TEST(JsonIo, SymmetrizeFlag) {
  const auto d = qcalc::domain_from_json(
      Json::parse(R"({"pieces":[{"disk":{"center":[1,1],"radius":0.5}}],"symmetrize":true})"));
  EXPECT_TRUE(d.is_conjugate_symmetric());
  EXPECT_EQ(d.pieces().size(), 2u);
}

TEST(JsonIo, DeclaredStemFlag) {
  const auto f = qcalc::stem_function_from_json(Json::parse(
      R"({"kind":"polynomial","coeffs":[1],"declared_stem":true,"domain":{"pieces":[{"disk":{"center":[0,0],"radius":1}}]}})"));
  EXPECT_TRUE(f.declared_stem());
}

TEST(JsonIo, ParseErrors) {
  using qcalc::Errc;
  EXPECT_EQ(parse_error_code(R"({"coeffs":[1]})"), Errc::ParseError);
  EXPECT_EQ(parse_error_code(R"({"kind":"polynomial","coeffs":[1]})"), Errc::ParseError);
  EXPECT_EQ(parse_error_code(R"({"kind":"spline","domain":{"pieces":[]}})"), Errc::ParseError);
  EXPECT_EQ(parse_error_code(R"({"kind":"polynomial","coeffs":[[1,2,3]],"domain":{"pieces":[{"disk":{"center":[0,0],"radius":1}}]}})"),
            Errc::ParseError);
  EXPECT_EQ(parse_error_code(R"({"kind":"polynomial","coeffs":[1],"domain":{"pieces":[{"ring":{}}]}})"), Errc::ParseError);
  EXPECT_EQ(parse_error_code(R"({"kind":"polynomial","coeffs":["a"],"domain":{"pieces":[{"disk":{"center":[0,0],"radius":1}}]}})"),
            Errc::ParseError);
  EXPECT_THROW((void)qcalc::load_stem_function("/nonexistent/spec.json"), qcalc::Error);
}

TEST(JsonIo, ClosuresCannotBeSerialized) {
  const auto c = StemFunction::closure([](Complex z) { return Biquaternion(z); }, PlaneDomain::disk(0.0, 1.0), "z", true);
  EXPECT_THROW((void)qcalc::to_json(c), qcalc::Error);
}

}  // namespace
