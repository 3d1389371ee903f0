#include "qcalc/slice.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qcalc/error.hpp"

namespace qcalc {

namespace {

using PlanarFn = std::function<Biquaternion(double, double)>;

Biquaternion central_dbar(const PlanarFn& phi, double x, double y, const Quaternion& s, double h) {
  const Biquaternion dx = (phi(x + h, y) - phi(x - h, y)) * (0.5 / h);
  const Biquaternion dy = (phi(x, y + h) - phi(x, y - h)) * (0.5 / h);
  return 0.5 * (dx + dy * Biquaternion(s));
}

template <class Inside>
bool stencil_inside(double x, double y, double h, Inside&& inside) {
  return inside(x + h, y) && inside(x - h, y) && inside(x, y + h) && inside(x, y - h);
}

Quaternion random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    const Quaternion v{0.0, gauss(rng), gauss(rng), gauss(rng)};
    if (imag_norm(v) > 1e-6) return UnitImaginary::from(v).value();
  }
}

// Seeded (x, y) points of the box whose stencil stays inside.
template <class Inside>
std::vector<std::pair<double, double>> stencil_points(const Box& box, int count, double h, std::mt19937_64& rng,
                                                      Inside&& inside) {
  std::vector<std::pair<double, double>> pts;
  if (box.empty) return pts;
  std::uniform_real_distribution<double> ux(box.x_min, box.x_max);
  std::uniform_real_distribution<double> uy(box.y_min, box.y_max);
  const long max_attempts = 1000L * count;
  for (long a = 0; a < max_attempts && static_cast<int>(pts.size()) < count; ++a) {
    const double x = ux(rng);
    const double y = uy(rng);
    if (stencil_inside(x, y, h, inside)) pts.emplace_back(x, y);
  }
  return pts;
}

}  // namespace

SliceFunction slice_function_of(const StemFunction& f) {
  return {[f](double x, double y, const UnitImaginary& s) { return fc_eval(f, on_slice(x, y, s)); },
          saturate(f.domain())};
}

SliceFunction slice_function_of(std::function<Biquaternion(const Quaternion&)> g, SaturatedSet domain) {
  return {[g = std::move(g)](double x, double y, const UnitImaginary& s) { return g(on_slice(x, y, s)); },
          std::move(domain)};
}

const std::vector<UnitImaginary>& standard_slices() {
  static const std::vector<UnitImaginary> slices = {
      UnitImaginary::from(Quaternion::j()),        UnitImaginary::from(Quaternion::k()),
      UnitImaginary::from(Quaternion::l()),        UnitImaginary::from(Quaternion{0, 1, 1, 0}),
      UnitImaginary::from(Quaternion{0, 1, 1, 1}),
  };
  return slices;
}

Biquaternion dbar_s(const SliceFunction& f, double x, double y, const UnitImaginary& s, double h) {
  if (!(h > 0.0)) throw Error(Errc::InvalidArgument, "step h must be positive");
  const auto inside = [&](double u, double v) { return f.domain.contains(on_slice(u, v, s)); };
  if (!stencil_inside(x, y, h, inside))
    throw Error(Errc::StencilOutsideDomain, "finite-difference stencil leaves the domain");
  return central_dbar([&](double u, double v) { return f.eval(u, v, s); }, x, y, s.value(), h);
}

SliceRegularityReport check_slice_regular(const SliceFunction& f, int samples, double h, double tol,
                                          std::uint64_t seed, int extra_random_slices) {
  if (samples < 1) throw Error(Errc::InvalidArgument, "samples must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<UnitImaginary> slices = standard_slices();
  for (int n = 0; n < extra_random_slices; ++n) slices.push_back(UnitImaginary::from(random_direction(rng)));

  SliceRegularityReport report;
  report.h = h;
  const Box box = f.domain.base().bounding_box();
  for (const auto& s : slices) {
    const auto inside = [&](double u, double v) { return f.domain.contains(on_slice(u, v, s)); };
    for (const auto& [x, y] : stencil_points(box, samples, h, rng, inside)) {
      report.max_residual = std::max(report.max_residual, cstar_norm(dbar_s(f, x, y, s, h)));
      ++report.samples;
    }
  }
  report.pass = report.samples > 0 && report.max_residual <= tol;
  return report;
}

RepresentationSides representation_formula(const StemFunction& f, double x, double y, const UnitImaginary& s,
                                           int sign) {
  if (sign != 1 && sign != -1) throw Error(Errc::InvalidArgument, "sign must be +1 or -1");
  const double sy = sign * y;
  const Complex z{x, sy};
  if (!f.domain().contains(z) || !f.domain().contains(std::conj(z)))
    throw Error(Errc::OutOfDomain, "x +- i y must lie in the domain");
  const Biquaternion is{Quaternion{}, s.value()};
  const Biquaternion lower = 0.5 * (Biquaternion(1.0) - is);
  const Biquaternion upper = 0.5 * (Biquaternion(1.0) + is);
  return {f(z), fc_eval(f, on_slice(x, sy, s)) * lower + fc_eval(f, on_slice(x, -sy, s)) * upper};
}

StemFunction reconstruct_stem_from_slice(const SliceFunction& psi, const UnitImaginary& s,
                                         const PlaneDomain& domain, const ReconstructOptions& options) {
  if (!domain.is_conjugate_symmetric())
    throw Error(Errc::NotSymmetric, "reconstruction needs a conjugate-symmetric domain");
  const PlanarFn on_plus = [psi, s](double x, double y) { return psi.eval(x, y, s); };
  // x + y(-s) = x + (-y)s, so the -s slice is read off the s slice.
  const PlanarFn on_minus = [psi, s](double x, double y) { return psi.eval(x, -y, s); };

  const auto inside = [&](double u, double v) {
    return domain.contains({u, v}) && domain.contains({u, -v});
  };
  std::mt19937_64 rng(options.seed);
  double worst = 0.0;
  for (const auto& [x, y] : stencil_points(domain.bounding_box(), options.check_points, options.h, rng, inside)) {
    // Rounding in the difference quotient grows with |psi|, so the gate is relative.
    const double scale = 1.0 + cstar_norm(on_plus(x, y));
    worst = std::max(worst, cstar_norm(central_dbar(on_plus, x, y, s.value(), options.h)) / scale);
    worst = std::max(worst, cstar_norm(central_dbar(on_minus, x, y, -s.value(), options.h)) / scale);
  }
  if (!(worst <= options.tol))
    throw Error(Errc::NotSliceHolomorphic, "dbar residual " + std::to_string(worst) + " exceeds tolerance");

  const Biquaternion is{Quaternion{}, s.value()};
  const Biquaternion minus_is = Biquaternion(1.0) - is;
  const Biquaternion plus_is = Biquaternion(1.0) + is;
  auto fn = [on_plus, minus_is, plus_is](Complex z) {
    const double x = z.real();
    const double y = z.imag();
    return 0.5 * (on_plus(x, y) * minus_is + on_plus(x, -y) * plus_is);
  };
  return StemFunction::closure(std::move(fn), domain, "reconstructed", true);
}

EquivalenceReport equivalence_harness(const StemFunction& f, int samples, const EquivalenceOptions& options) {
  EquivalenceReport report;
  const SliceFunction phi = slice_function_of(f);
  report.regular = check_slice_regular(phi, samples, options.h, options.regular_tol, options.seed);

  const auto& all = standard_slices();
  const std::vector<UnitImaginary> sources = {all[0], all[1], all[4]};
  const std::vector<Complex> grid = halton_points(f.domain(), samples);

  bool ok = report.regular.pass;
  for (const auto& s : sources) {
    SliceReconstructionReport sr;
    sr.slice = s.value();
    try {
      const StemFunction rebuilt =
          reconstruct_stem_from_slice(phi, s, f.domain(), {options.h, options.regular_tol, 32, options.seed});
      sr.reconstructed = true;
      sr.stem = verify_stem(rebuilt, kDefaultStemGridPoints, options.stem_tol);
      for (const auto& t : all) {
        if (t.value() == s.value()) continue;
        for (const Complex z : grid) {
          const Quaternion q = on_slice(z.real(), z.imag(), t);
          sr.max_roundtrip = std::max(sr.max_roundtrip, cstar_norm(fc_eval(rebuilt, q) - fc_eval(f, q)));
        }
      }
    } catch (const Error& e) {
      if (e.code() != Errc::NotSliceHolomorphic) throw;
    }
    report.max_roundtrip = std::max(report.max_roundtrip, sr.max_roundtrip);
    ok = ok && sr.reconstructed && sr.stem && sr.max_roundtrip <= options.roundtrip_tol;
    report.slices.push_back(sr);
  }
  report.pass = ok;
  return report;
}

}  // namespace qcalc
