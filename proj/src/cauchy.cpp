#include "qcalc/cauchy.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>
#include <numbers>

#include "qcalc/detail/accumulator.hpp"
#include "qcalc/error.hpp"

namespace qcalc {

namespace {

constexpr double kBoundaryRelTol = 1e-14;
constexpr double kTouchRelTol = 1e-12;

// Trapezoidal sums on one circle. Holds the running sum of
// F(zeta_k) (zeta_k - q)^-1 (zeta_k - c) over the current nodes.
class CircleQuadrature {
 public:
  CircleQuadrature(const StemFunction& f, const Quaternion& q, const Circle& c) : f_(f), q_(q), c_(c) {
    for (int k = 0; k < c_.nodes; ++k) add_node(2.0 * std::numbers::pi * k / c_.nodes);
  }

  // Adds the midpoints of the current rule.
  void refine() {
    const int n = c_.nodes;
    for (int k = 0; k < n; ++k) add_node(2.0 * std::numbers::pi * (k + 0.5) / n);
    c_.nodes = 2 * n;
  }

  Biquaternion value() const { return (1.0 / c_.nodes) * acc_.total(); }
  const Circle& circle() const { return c_; }

 private:
  void add_node(double theta) {
    const Complex offset = std::polar(c_.radius, theta);
    const Complex zeta = c_.center + offset;
    acc_.add(f_(zeta) * resolvent(q_, zeta) * offset);
  }

  const StemFunction& f_;
  Quaternion q_;
  Circle c_;
  detail::BiquaternionAccumulator acc_;
};

void check_contour_against_spectrum(const ContourSpec& contour, const Spectrum& sp) {
  const std::vector<Complex> points = sp.is_real ? std::vector<Complex>{sp.s_plus}
                                                 : std::vector<Complex>{sp.s_plus, sp.s_minus};
  for (const Complex s : points) {
    int enclosing = 0;
    for (const auto& c : contour.circles) {
      const double dist = std::abs(s - c.center);
      if (std::abs(dist - c.radius) <= kTouchRelTol * c.radius)
        throw Error(Errc::ContourTouchesSpectrum, "a contour circle passes through the spectrum");
      if (dist < c.radius) ++enclosing;
    }
    if (enclosing != 1) throw Error(Errc::SpectrumNotEnclosed, "each eigenvalue must lie inside one circle");
  }
}

}  // namespace

void ContourSpec::validate() const {
  if (circles.empty()) throw Error(Errc::InvalidArgument, "contour has no circles");
  for (const auto& c : circles) {
    if (!(c.radius > 0.0)) throw Error(Errc::InvalidArgument, "circle radius must be positive");
    if (c.nodes < 8 || !std::has_single_bit(static_cast<unsigned>(c.nodes)))
      throw Error(Errc::InvalidArgument, "circle node count must be a power of two >= 8");
  }
  for (std::size_t a = 0; a < circles.size(); ++a)
    for (std::size_t b = a + 1; b < circles.size(); ++b)
      if (std::abs(circles[a].center - circles[b].center) <= circles[a].radius + circles[b].radius)
        throw Error(Errc::InvalidArgument, "contour circles must have disjoint closures");
}

ContourSpec default_contour(const Quaternion& q, const PlaneDomain& domain, int nodes) {
  const Spectrum sp = spectrum_of(q);
  const double scale = 1.0 + std::abs(sp.s_plus);
  double d = std::numeric_limits<double>::infinity();
  for (const Complex s : {sp.s_plus, sp.s_minus}) {
    const double margin = domain.signed_margin(s);
    if (margin < -kBoundaryRelTol * scale)
      throw Error(Errc::SpectrumOutsideDomain, "spectrum of q is not inside the domain");
    if (margin <= kBoundaryRelTol * scale)
      throw Error(Errc::DegenerateDomain, "spectrum of q lies on the domain boundary");
    d = std::min(d, margin);
  }
  if (sp.is_real) return {{Circle{sp.s_plus, d / 2.0, nodes}}};
  const double r = std::min(sp.s_plus.imag() / 2.0, d / 2.0);
  return {{Circle{sp.s_plus, r, nodes}, Circle{sp.s_minus, r, nodes}}};
}

CauchyResult cauchy_transform(const StemFunction& f, const Quaternion& q, const ContourSpec& contour, double tol,
                              int max_nodes) {
  if (!f.is_analytic()) throw Error(Errc::NotAnalytic, "Cauchy transform needs an analytic spec");
  contour.validate();
  check_contour_against_spectrum(contour, spectrum_of(q));

  std::vector<CircleQuadrature> rules;
  rules.reserve(contour.circles.size());
  for (const auto& c : contour.circles) rules.emplace_back(f, q, c);

  auto total = [&] {
    Biquaternion v;
    for (const auto& r : rules) v += r.value();
    return v;
  };

  Biquaternion prev = total();
  for (;;) {
    if (std::any_of(rules.begin(), rules.end(), [&](const auto& r) { return 2 * r.circle().nodes > max_nodes; }))
      throw Error(Errc::NoConvergence, "trapezoidal rule did not converge within the node budget");
    for (auto& r : rules) r.refine();
    const Biquaternion next = total();
    const double diff = cstar_norm(next - prev);
    if (diff <= tol * std::max(1.0, cstar_norm(next))) {
      CauchyResult result{next, diff, 0, {}};
      for (const auto& r : rules) {
        result.contour.circles.push_back(r.circle());
        result.nodes_used += r.circle().nodes;
      }
      return result;
    }
    prev = next;
  }
}

CauchyResult cauchy_transform(const StemFunction& f, const Quaternion& q, double tol) {
  return cauchy_transform(f, q, default_contour(q, f.domain()), tol);
}

double check_spectral_equivalence(const StemFunction& f, const Quaternion& q, double tol) {
  const Biquaternion via_contour = cauchy_transform(f, q, tol).value;
  return cstar_norm(via_contour - fc_eval(f, q));
}

Biquaternion extended_derivative(const StemFunction& f, int n, const Quaternion& q, double tol) {
  return cauchy_transform(f.derivative(n), q, tol).value;
}

double taylor_radius(const StemFunction& f, double s0) {
  if (!f.domain().contains(s0)) throw Error(Errc::OutOfDomain, "expansion point outside the domain");
  return std::min(f.domain().signed_margin(s0), f.analytic_radius(s0));
}

double default_expansion_point(const StemFunction& f, const Quaternion& q) {
  std::vector<double> candidates{q.w, 0.0};
  for (const auto& piece : f.domain().pieces()) {
    if (const auto* d = std::get_if<Disk>(&piece)) candidates.push_back(d->center.real());
    if (const auto* r = std::get_if<Rect>(&piece)) {
      candidates.push_back(0.5 * (r->x_min + r->x_max));
      candidates.push_back(std::clamp(q.w, r->x_min, r->x_max));
    }
  }
  const Box box = f.domain().bounding_box();
  if (!box.empty)
    for (int n = 1; n < 32; ++n) candidates.push_back(box.x_min + (box.x_max - box.x_min) * n / 32.0);

  double best = q.w, best_slack = -std::numeric_limits<double>::infinity();
  for (const double s0 : candidates) {
    if (!f.domain().contains(s0)) continue;
    const double slack = taylor_radius(f, s0) - norm(q - Quaternion(s0));
    if (slack > best_slack) {
      best = s0;
      best_slack = slack;
    }
  }
  return best;
}

Biquaternion taylor_eval(const StemFunction& f, double s0, const Quaternion& q, int terms) {
  if (terms < 1) throw Error(Errc::InvalidArgument, "terms must be >= 1");
  const Quaternion shift = q - Quaternion(s0);
  if (!(norm(shift) < taylor_radius(f, s0)))
    throw Error(Errc::OutsideConvergenceDisk, "q is outside the disk of convergence about s0");
  const std::vector<Biquaternion> coeffs = f.taylor_coefficients(s0, terms);
  Biquaternion acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * Biquaternion(shift) + *it;
  return acc;
}

}  // namespace qcalc
