#include "qcalc/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "qcalc/error.hpp"

namespace qcalc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

// Drops the sign of negative zero so that output is stable.
double clean(double v) { return v + 0.0; }

double real_from_json(const Json& j) {
  if (!j.is_number()) throw Error(Errc::ParseError, "expected a number, got " + j.dump());
  return j.get<double>();
}

Json coeffs_to_json(const std::vector<Biquaternion>& coeffs) {
  Json arr = Json::array();
  for (const auto& c : coeffs) arr.push_back(to_json(c));
  return arr;
}

std::vector<Biquaternion> coeffs_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(Errc::ParseError, "coeffs must be a non-empty array");
  std::vector<Biquaternion> out;
  for (const auto& c : j) out.push_back(biquaternion_from_json(c));
  return out;
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

StemFunction parse_spec(const Json& j, const PlaneDomain* inherited) {
  const std::string kind = require(j, "kind").get<std::string>();
  PlaneDomain domain;
  if (j.contains("domain"))
    domain = domain_from_json(j.at("domain"));
  else if (inherited != nullptr)
    domain = *inherited;
  else
    throw Error(Errc::ParseError, "missing field 'domain'");

  StemFunction f = [&]() -> StemFunction {
    if (kind == "polynomial") return StemFunction::polynomial(coeffs_from_json(require(j, "coeffs")), domain);
    if (kind == "power_series") {
      if (j.contains("named")) {
        const std::string name = j.at("named").get<std::string>();
        const int terms = j.value("terms", name == "exp" ? 40 : 200);
        if (name == "exp") return StemFunction::exp_series(domain, terms);
        if (name == "geometric") return StemFunction::geometric_series(domain, terms);
        throw Error(Errc::ParseError, "unknown named series '" + name + "'");
      }
      const double center = j.contains("center") ? real_from_json(j.at("center")) : 0.0;
      const double radius = j.contains("radius") && !j.at("radius").is_null()
                                ? real_from_json(j.at("radius"))
                                : std::numeric_limits<double>::infinity();
      return StemFunction::power_series(coeffs_from_json(require(j, "coeffs")), center, radius, domain);
    }
    if (kind == "resolvent_kernel") {
      const Biquaternion coeff = j.contains("coeff") ? biquaternion_from_json(j.at("coeff")) : Biquaternion(1.0);
      return StemFunction::resolvent_kernel(complex_from_json(require(j, "pole")), domain, j.value("order", 1),
                                            coeff);
    }
    if (kind == "sum" || kind == "product") {
      const Json& parts = require(j, kind == "sum" ? "terms" : "factors");
      if (!parts.is_array() || parts.empty()) throw Error(Errc::ParseError, kind + " needs a non-empty array");
      std::vector<StemFunction> children;
      for (const auto& p : parts) children.push_back(parse_spec(p, &domain));
      return kind == "sum" ? StemFunction::sum(std::move(children), domain)
                           : StemFunction::product(std::move(children), domain);
    }
    throw Error(Errc::ParseError, "unknown spec kind '" + kind + "'");
  }();
  if (j.contains("declared_stem")) f = f.with_declared_stem(j.at("declared_stem").get<bool>());
  return f;
}

}  // namespace

Json to_json(const Quaternion& q) { return Json::array({clean(q.w), clean(q.x), clean(q.y), clean(q.z)}); }

Json to_json(const Biquaternion& a) {
  return Json::array({clean(a.re.w), clean(a.re.x), clean(a.re.y), clean(a.re.z), clean(a.im.w), clean(a.im.x),
                      clean(a.im.y), clean(a.im.z)});
}

Json to_json(Complex c) { return Json::array({clean(c.real()), clean(c.imag())}); }

Json to_json(const Spectrum& s) {
  return {{"s_plus", to_json(s.s_plus)}, {"s_minus", to_json(s.s_minus)}, {"is_real", s.is_real}};
}

Json to_json(const PlaneDomain& d) {
  Json pieces = Json::array();
  for (const auto& p : d.pieces()) {
    pieces.push_back(std::visit(
        Overloaded{
            [](const Disk& disk) -> Json {
              return {{"disk", {{"center", to_json(disk.center)}, {"radius", disk.radius}}}};
            },
            [](const Rect& r) -> Json {
              return {{"rect", {{"x_min", r.x_min}, {"x_max", r.x_max}, {"y_min", r.y_min}, {"y_max", r.y_max}}}};
            },
        },
        p));
  }
  return {{"pieces", pieces}};
}

Json to_json(const StemFunction& f) {
  Json j = std::visit(
      Overloaded{
          [](const PolynomialTerm& p) -> Json { return {{"kind", "polynomial"}, {"coeffs", coeffs_to_json(p.coeffs)}}; },
          [](const PowerSeriesTerm& s) -> Json {
            Json out{{"kind", "power_series"}, {"coeffs", coeffs_to_json(s.coeffs)}, {"center", s.center}};
            out["radius"] = std::isfinite(s.radius) ? Json(s.radius) : Json(nullptr);
            return out;
          },
          [](const ResolventKernelTerm& k) -> Json {
            return {{"kind", "resolvent_kernel"}, {"pole", to_json(k.pole)}, {"order", k.order},
                    {"coeff", to_json(k.coeff)}};
          },
          [](const SumTerm& s) -> Json {
            Json arr = Json::array();
            for (const auto& t : s.terms) arr.push_back(to_json(t));
            return {{"kind", "sum"}, {"terms", arr}};
          },
          [](const ProductTerm& p) -> Json {
            Json arr = Json::array();
            for (const auto& t : p.factors) arr.push_back(to_json(t));
            return {{"kind", "product"}, {"factors", arr}};
          },
          [](const ClosureTerm& c) -> Json {
            throw Error(Errc::InvalidArgument, "closure '" + c.label + "' cannot be serialized");
          },
      },
      f.term());
  j["domain"] = to_json(f.domain());
  j["declared_stem"] = f.declared_stem();
  return j;
}

Quaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(Errc::ParseError, "quaternion must be an array of 4 reals");
  return {real_from_json(j[0]), real_from_json(j[1]), real_from_json(j[2]), real_from_json(j[3])};
}

Biquaternion biquaternion_from_json(const Json& j) {
  if (j.is_number()) return Biquaternion(j.get<double>());
  if (j.is_array() && j.size() == 4) return quaternion_from_json(j);
  if (!j.is_array() || j.size() != 8) throw Error(Errc::ParseError, "biquaternion must be an array of 8 reals");
  return {{real_from_json(j[0]), real_from_json(j[1]), real_from_json(j[2]), real_from_json(j[3])},
          {real_from_json(j[4]), real_from_json(j[5]), real_from_json(j[6]), real_from_json(j[7])}};
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(Errc::ParseError, "complex number must be [re, im]");
  return {real_from_json(j[0]), real_from_json(j[1])};
}

PlaneDomain domain_from_json(const Json& j) {
  const Json& pieces = require(j, "pieces");
  if (!pieces.is_array()) throw Error(Errc::ParseError, "pieces must be an array");
  std::vector<Piece> out;
  for (const auto& p : pieces) {
    if (p.contains("disk")) {
      const Json& d = p.at("disk");
      out.push_back(Disk{complex_from_json(require(d, "center")), real_from_json(require(d, "radius"))});
    } else if (p.contains("rect")) {
      const Json& r = p.at("rect");
      out.push_back(Rect{real_from_json(require(r, "x_min")), real_from_json(require(r, "x_max")),
                         real_from_json(require(r, "y_min")), real_from_json(require(r, "y_max"))});
    } else {
      throw Error(Errc::ParseError, "domain piece must be a disk or a rect");
    }
  }
  PlaneDomain domain(std::move(out));
  if (j.value("symmetrize", false)) domain = symmetrize(domain);
  return domain;
}

StemFunction stem_function_from_json(const Json& j) {
  try {
    return parse_spec(j, nullptr);
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

StemFunction load_stem_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return stem_function_from_json(j);
}

}  // namespace qcalc
