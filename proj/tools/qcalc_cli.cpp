// qcalc: command-line front end for the quaternionic functional calculus.
//
//   qcalc spectrum W X Y Z
//   qcalc eval   --spec F.json --q W X Y Z [--route spectral|cauchy|taylor|all]
//   qcalc cauchy --spec F.json --q W X Y Z
//   qcalc check  --spec F.json --what stem|regular|equivalence
//   qcalc check-regular --spec F.json
//
// Exit codes: 0 success / check passed, 1 check failed, 2 usage or parse
// error, 3 domain violation, 4 no convergence.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcalc/cauchy.hpp"
#include "qcalc/error.hpp"
#include "qcalc/json_io.hpp"
#include "qcalc/slice.hpp"

namespace {

using qcalc::Json;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kDomain = 3, kNoConvergence = 4 };

int exit_code_for(qcalc::Errc code) {
  using qcalc::Errc;
  switch (code) {
    case Errc::SpectrumOutsideDomain:
    case Errc::OutOfDomain:
    case Errc::DegenerateDomain:
    case Errc::SeriesDivergence:
    case Errc::OutsideConvergenceDisk:
    case Errc::ContourTouchesSpectrum:
    case Errc::SpectrumNotEnclosed:
    case Errc::SpectrumHit:
    case Errc::NotSymmetric:
    case Errc::StencilOutsideDomain:
      return kDomain;
    case Errc::NoConvergence:
      return kNoConvergence;
    default:
      return kUsage;
  }
}

struct Options {
  std::vector<double> q;
  std::string spec_path;
  std::string route = "spectral";
  std::string what;
  std::string format = "json";
  std::optional<double> tol;
  std::optional<double> s0;
  double h = qcalc::kDefaultDbarStep;
  double eps = qcalc::kDefaultSpectralEps;
  int nodes = 64;
  int max_nodes = qcalc::kDefaultMaxNodes;
  int terms = 40;
  int samples = 50;
  int grid = qcalc::kDefaultStemGridPoints;
  std::uint64_t seed = 0;
};

qcalc::Quaternion quaternion_arg(const std::vector<double>& v) { return {v.at(0), v.at(1), v.at(2), v.at(3)}; }

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string csv_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v + 0.0;
  return os.str();
}

void print_csv_header(bool with_route) {
  if (with_route) std::cout << "route,";
  std::cout << "re.w,re.x,re.y,re.z,im.w,im.x,im.y,im.z\n";
}

void print_csv_row(const qcalc::Biquaternion& a, const std::string& route = {}) {
  if (!route.empty()) std::cout << route << ',';
  const double c[8] = {a.re.w, a.re.x, a.re.y, a.re.z, a.im.w, a.im.x, a.im.y, a.im.z};
  for (int n = 0; n < 8; ++n) std::cout << csv_number(c[n]) << (n == 7 ? '\n' : ',');
}

bool value_is_quaternion(const qcalc::Biquaternion& v) {
  return qcalc::cstar_norm(qcalc::Biquaternion(v.im)) <= 1e-12 * (1.0 + qcalc::cstar_norm(v));
}

Json contour_json(const qcalc::ContourSpec& c) {
  Json circles = Json::array();
  for (const auto& circle : c.circles)
    circles.push_back({{"center", qcalc::to_json(circle.center)}, {"radius", circle.radius}, {"nodes", circle.nodes}});
  return {{"circles", circles}};
}

int cmd_spectrum(const Options& o) {
  const qcalc::Spectrum sp = qcalc::spectrum_of(quaternion_arg(o.q), o.eps);
  if (o.format == "csv") {
    std::cout << "s_plus_re,s_plus_im,s_minus_re,s_minus_im,is_real\n"
              << csv_number(sp.s_plus.real()) << ',' << csv_number(sp.s_plus.imag()) << ','
              << csv_number(sp.s_minus.real()) << ',' << csv_number(sp.s_minus.imag()) << ','
              << (sp.is_real ? "true" : "false") << '\n';
  } else {
    print_json(qcalc::to_json(sp));
  }
  return kOk;
}

qcalc::Biquaternion route_value(const std::string& route, const qcalc::StemFunction& f, const qcalc::Quaternion& q,
                                const Options& o) {
  if (route == "spectral") return qcalc::fc_eval(f, q);
  if (route == "cauchy") {
    const auto contour = qcalc::default_contour(q, f.domain(), o.nodes);
    return qcalc::cauchy_transform(f, q, contour, o.tol.value_or(qcalc::kDefaultCauchyTol), o.max_nodes).value;
  }
  return qcalc::taylor_eval(f, o.s0 ? *o.s0 : qcalc::default_expansion_point(f, q), q, o.terms);
}

int cmd_eval(const Options& o) {
  const qcalc::StemFunction f = qcalc::load_stem_function(o.spec_path);
  const qcalc::Quaternion q = quaternion_arg(o.q);
  const qcalc::Spectrum sp = qcalc::require_spectrum_in(f.domain(), q);

  if (o.route != "all") {
    const qcalc::Biquaternion v = route_value(o.route, f, q, o);
    if (o.format == "csv") {
      print_csv_header(false);
      print_csv_row(v);
      return kOk;
    }
    print_json({{"route", o.route},
                {"value", qcalc::to_json(v)},
                {"is_quaternion", value_is_quaternion(v)},
                {"spectrum", qcalc::to_json(sp)}});
    return kOk;
  }

  const qcalc::Biquaternion spectral = route_value("spectral", f, q, o);
  const qcalc::Biquaternion cauchy = route_value("cauchy", f, q, o);
  const qcalc::Biquaternion taylor = route_value("taylor", f, q, o);
  if (o.format == "csv") {
    print_csv_header(true);
    print_csv_row(spectral, "spectral");
    print_csv_row(cauchy, "cauchy");
    print_csv_row(taylor, "taylor");
    return kOk;
  }
  print_json({{"route", "all"},
              {"value", qcalc::to_json(spectral)},
              {"is_quaternion", value_is_quaternion(spectral)},
              {"spectrum", qcalc::to_json(sp)},
              {"routes",
               {{"spectral", qcalc::to_json(spectral)},
                {"cauchy", qcalc::to_json(cauchy)},
                {"taylor", qcalc::to_json(taylor)}}},
              {"deltas",
               {{"spectral_vs_cauchy", qcalc::cstar_norm(spectral - cauchy)},
                {"spectral_vs_taylor", qcalc::cstar_norm(spectral - taylor)},
                {"cauchy_vs_taylor", qcalc::cstar_norm(cauchy - taylor)}}}});
  return kOk;
}

int cmd_cauchy(const Options& o) {
  const qcalc::StemFunction f = qcalc::load_stem_function(o.spec_path);
  const qcalc::Quaternion q = quaternion_arg(o.q);
  const auto contour = qcalc::default_contour(q, f.domain(), o.nodes);
  const qcalc::CauchyResult r = qcalc::cauchy_transform(f, q, contour, o.tol.value_or(qcalc::kDefaultCauchyTol), o.max_nodes);
  if (o.format == "csv") {
    print_csv_header(false);
    print_csv_row(r.value);
    return kOk;
  }
  print_json({{"value", qcalc::to_json(r.value)},
              {"error_estimate", r.error_estimate},
              {"nodes_used", r.nodes_used},
              {"contour", contour_json(r.contour)}});
  return kOk;
}

Json regular_json(const qcalc::SliceRegularityReport& r) {
  return {{"max_residual", r.max_residual}, {"h", r.h}, {"samples", r.samples}, {"pass", r.pass}};
}

int cmd_check(const Options& o, const std::string& what) {
  const qcalc::StemFunction f = qcalc::load_stem_function(o.spec_path);
  Json report;
  bool pass = false;
  if (what == "stem") {
    const double tol = o.tol.value_or(1e-12);
    const qcalc::StemReport r = qcalc::verify_stem_report(f, o.grid, tol);
    pass = r.pass;
    report = {{"what", "stem"},           {"pass", r.pass},
              {"certified", r.certified}, {"points_checked", r.points_checked},
              {"max_residual", r.max_residual}, {"tol", tol}};
  } else if (what == "regular") {
    const auto r = qcalc::check_slice_regular(qcalc::slice_function_of(f), o.samples, o.h,
                                              o.tol.value_or(qcalc::kDefaultDbarTol), o.seed);
    pass = r.pass;
    report = regular_json(r);
  } else {
    qcalc::EquivalenceOptions eo;
    eo.h = o.h;
    eo.regular_tol = o.tol.value_or(qcalc::kDefaultDbarTol);
    eo.seed = o.seed;
    const qcalc::EquivalenceReport r = qcalc::equivalence_harness(f, o.samples, eo);
    pass = r.pass;
    Json slices = Json::array();
    for (const auto& s : r.slices)
      slices.push_back({{"slice", qcalc::to_json(s.slice)},
                        {"reconstructed", s.reconstructed},
                        {"stem", s.stem},
                        {"max_roundtrip", s.max_roundtrip}});
    report = {{"what", "equivalence"},
              {"pass", r.pass},
              {"regular", regular_json(r.regular)},
              {"slices", slices},
              {"max_roundtrip", r.max_roundtrip}};
  }
  print_json(report);
  return pass ? kOk : kCheckFailed;
}

void add_q_option(CLI::App* app, Options& o) {
  app->add_option("--q", o.q, "quaternion components w x y z")->expected(4)->required();
}

void add_spec_option(CLI::App* app, Options& o) {
  app->add_option("--spec", o.spec_path, "stem function spec (JSON)")->required()->check(CLI::ExistingFile);
}

void add_format_option(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternionic functional calculus toolkit"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help message and exit");  // -h is not free: --h is the step flag
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of a quaternion in H + iH");
  spectrum->add_option("q", o.q, "w x y z")->expected(4)->required();
  spectrum->add_option("--eps", o.eps, "relative threshold below which q counts as real");
  add_format_option(spectrum, o);

  auto* eval = app.add_subcommand("eval", "evaluate F_H(q)");
  add_spec_option(eval, o);
  add_q_option(eval, o);
  eval->add_option("--route", o.route, "evaluation route")
      ->check(CLI::IsMember({"spectral", "cauchy", "taylor", "all"}));
  eval->add_option("--tol", o.tol, "quadrature tolerance");
  eval->add_option("--nodes", o.nodes, "initial nodes per circle");
  eval->add_option("--max-nodes", o.max_nodes, "node budget per circle");
  eval->add_option("--terms", o.terms, "Taylor terms");
  eval->add_option("--s0", o.s0, "real expansion point for the Taylor route");
  add_format_option(eval, o);

  auto* cauchy = app.add_subcommand("cauchy", "quaternionic Cauchy transform by contour quadrature");
  add_spec_option(cauchy, o);
  add_q_option(cauchy, o);
  cauchy->add_option("--tol", o.tol, "quadrature tolerance");
  cauchy->add_option("--nodes", o.nodes, "initial nodes per circle");
  cauchy->add_option("--max-nodes", o.max_nodes, "node budget per circle");
  add_format_option(cauchy, o);

  auto* check = app.add_subcommand("check", "verification reports");
  add_spec_option(check, o);
  check->add_option("--what", o.what, "stem | regular | equivalence")
      ->required()
      ->check(CLI::IsMember({"stem", "regular", "equivalence"}));
  auto* check_regular = app.add_subcommand("check-regular", "slice regularity report for F_H");
  add_spec_option(check_regular, o);
  for (auto* sub : {check, check_regular}) {
    sub->add_option("--tol", o.tol, "pass threshold");
    sub->add_option("--h", o.h, "finite-difference step");
    sub->add_option("--samples", o.samples, "sample points per slice");
    sub->add_option("--grid", o.grid, "stem-check grid points");
    sub->add_option("--seed", o.seed, "sampling seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(o);
    if (eval->parsed()) return cmd_eval(o);
    if (cauchy->parsed()) return cmd_cauchy(o);
    if (check->parsed()) return cmd_check(o, o.what);
    if (check_regular->parsed()) return cmd_check(o, "regular");
  } catch (const qcalc::Error& e) {
    std::cerr << Json{{"error", std::string(qcalc::to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
    return kUsage;
  }
  return kUsage;
}
