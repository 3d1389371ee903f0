#include "qcalc/stem_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qcalc/error.hpp"

namespace qcalc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

bool all_quaternion(const std::vector<Biquaternion>& coeffs) {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Biquaternion& a) { return a.is_quaternion(); });
}

// Horner in the complex variable t; t is central so the side is irrelevant.
Biquaternion horner(const std::vector<Biquaternion>& coeffs, Complex t) {
  Biquaternion acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = t * acc + *it;
  return acc;
}

std::vector<Biquaternion> differentiate(const std::vector<Biquaternion>& coeffs) {
  if (coeffs.size() <= 1) return {Biquaternion{}};
  std::vector<Biquaternion> out(coeffs.size() - 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k) out[k - 1] = static_cast<double>(k) * coeffs[k];
  return out;
}

// Coefficients of p(u + delta) in u, by repeated synthetic division.
std::vector<Biquaternion> taylor_shift(std::vector<Biquaternion> a, Complex delta) {
  const std::size_t m = a.size();
  if (m < 2 || delta == Complex{}) return a;
  for (std::size_t i = 0; i + 1 < m; ++i)
    for (std::size_t j = m - 1; j-- > i;) a[j] = a[j] + delta * a[j + 1];
  return a;
}

void resize_to(std::vector<Biquaternion>& v, int count) { v.resize(static_cast<std::size_t>(count)); }

// Taylor coefficients of (zeta - pole)^-order about s0.
std::vector<Complex> kernel_series(Complex pole, int order, Complex s0, int count) {
  std::vector<Complex> c(static_cast<std::size_t>(count));
  if (count == 0) return c;
  const Complex w = s0 - pole;
  c[0] = std::pow(w, -order);
  for (int n = 1; n < count; ++n)
    c[static_cast<std::size_t>(n)] =
        c[static_cast<std::size_t>(n - 1)] * (-static_cast<double>(order + n - 1) / n) / w;
  return c;
}

Complex kernel_value(Complex pole, int order, Complex lambda) {
  const Complex inv = 1.0 / (lambda - pole);
  Complex r = 1.0;
  for (int n = 0; n < order; ++n) r *= inv;
  return r;
}

}  // namespace

StemFunction StemFunction::polynomial(std::vector<Biquaternion> coeffs, PlaneDomain domain) {
  if (coeffs.empty()) coeffs.emplace_back();
  const bool stem = all_quaternion(coeffs);
  return {std::make_shared<const StemTerm>(PolynomialTerm{std::move(coeffs)}), std::move(domain), stem};
}

StemFunction StemFunction::constant(const Biquaternion& value, PlaneDomain domain) {
  return polynomial({value}, std::move(domain));
}

StemFunction StemFunction::power_series(std::vector<Biquaternion> coeffs, double center, double radius,
                                        PlaneDomain domain) {
  if (!(radius > 0.0)) throw Error(Errc::InvalidArgument, "power series radius must be positive");
  if (coeffs.empty()) coeffs.emplace_back();
  const bool stem = all_quaternion(coeffs);
  return {std::make_shared<const StemTerm>(PowerSeriesTerm{std::move(coeffs), center, radius}),
          std::move(domain), stem};
}

StemFunction StemFunction::resolvent_kernel(Complex pole, PlaneDomain domain, int order,
                                            const Biquaternion& coeff) {
  if (order < 1) throw Error(Errc::InvalidArgument, "kernel order must be >= 1");
  if (domain.contains(pole) || domain.contains(std::conj(pole)))
    throw Error(Errc::InvalidArgument, "kernel pole inside its domain");
  return {std::make_shared<const StemTerm>(ResolventKernelTerm{pole, order, coeff}), std::move(domain),
          coeff.is_quaternion()};
}

StemFunction StemFunction::sum(std::vector<StemFunction> terms, std::optional<PlaneDomain> domain) {
  if (terms.empty()) throw Error(Errc::InvalidArgument, "empty sum");
  PlaneDomain d = domain ? std::move(*domain) : terms.front().domain();
  const bool declared =
      std::all_of(terms.begin(), terms.end(), [](const StemFunction& f) { return f.declared_stem(); });
  return {std::make_shared<const StemTerm>(SumTerm{std::move(terms)}), std::move(d), declared};
}

StemFunction StemFunction::product(std::vector<StemFunction> factors, std::optional<PlaneDomain> domain) {
  if (factors.empty()) throw Error(Errc::InvalidArgument, "empty product");
  PlaneDomain d = domain ? std::move(*domain) : factors.front().domain();
  const bool declared =
      std::all_of(factors.begin(), factors.end(), [](const StemFunction& f) { return f.declared_stem(); });
  return {std::make_shared<const StemTerm>(ProductTerm{std::move(factors)}), std::move(d), declared};
}

StemFunction StemFunction::closure(std::function<Biquaternion(Complex)> fn, PlaneDomain domain,
                                   std::string label, bool declared_stem) {
  return {std::make_shared<const StemTerm>(ClosureTerm{std::move(fn), std::move(label)}), std::move(domain),
          declared_stem};
}

StemFunction StemFunction::exp_series(PlaneDomain domain, int terms) {
  if (terms < 1) throw Error(Errc::InvalidArgument, "exp series needs at least one term");
  std::vector<Biquaternion> coeffs(static_cast<std::size_t>(terms));
  double c = 1.0;
  for (int n = 0; n < terms; ++n) {
    coeffs[static_cast<std::size_t>(n)] = c;
    c /= (n + 1);
  }
  return power_series(std::move(coeffs), 0.0, std::numeric_limits<double>::infinity(), std::move(domain));
}

StemFunction StemFunction::geometric_series(PlaneDomain domain, int terms) {
  if (terms < 1) throw Error(Errc::InvalidArgument, "geometric series needs at least one term");
  return power_series(std::vector<Biquaternion>(static_cast<std::size_t>(terms), Biquaternion(1.0)), 0.0, 1.0,
                      std::move(domain));
}

StemFunction StemFunction::with_declared_stem(bool stem) const { return {term_, domain_, stem}; }

StemFunction StemFunction::with_domain(PlaneDomain domain) const {
  return {term_, std::move(domain), declared_stem_};
}

Biquaternion StemFunction::operator()(Complex lambda) const {
  if (!domain_.contains(lambda)) throw Error(Errc::OutOfDomain, "evaluation point outside the domain");
  return eval_raw(lambda);
}

Biquaternion StemFunction::eval_raw(Complex lambda) const {
  return std::visit(
      Overloaded{
          [&](const PolynomialTerm& p) { return horner(p.coeffs, lambda); },
          [&](const PowerSeriesTerm& s) {
            const Complex t = lambda - s.center;
            if (!(std::abs(t) < s.radius))
              throw Error(Errc::SeriesDivergence, "point outside the disk of convergence");
            return horner(s.coeffs, t);
          },
          [&](const ResolventKernelTerm& k) {
            const Complex scalar =
                k.pole.imag() == 0.0
                    ? kernel_value(k.pole, k.order, lambda)
                    : 0.5 * (kernel_value(k.pole, k.order, lambda) +
                             kernel_value(std::conj(k.pole), k.order, lambda));
            return k.coeff * scalar;
          },
          [&](const SumTerm& s) {
            Biquaternion acc;
            for (const auto& t : s.terms) acc += t.eval_raw(lambda);
            return acc;
          },
          [&](const ProductTerm& p) {
            Biquaternion acc(1.0);
            for (const auto& f : p.factors) acc = acc * f.eval_raw(lambda);
            return acc;
          },
          [&](const ClosureTerm& c) { return c.fn(lambda); },
      },
      *term_);
}

bool StemFunction::is_analytic() const {
  return std::visit(
      Overloaded{
          [](const SumTerm& s) {
            return std::all_of(s.terms.begin(), s.terms.end(), [](const auto& t) { return t.is_analytic(); });
          },
          [](const ProductTerm& p) {
            return std::all_of(p.factors.begin(), p.factors.end(),
                               [](const auto& f) { return f.is_analytic(); });
          },
          [](const ClosureTerm&) { return false; },
          [](const auto&) { return true; },
      },
      *term_);
}

std::optional<bool> StemFunction::certified_stem() const {
  auto all_certified = [](const std::vector<StemFunction>& fs) -> std::optional<bool> {
    for (const auto& f : fs) {
      const auto c = f.certified_stem();
      if (!c || !*c) return std::nullopt;
    }
    return true;
  };
  return std::visit(
      Overloaded{
          [](const PolynomialTerm& p) -> std::optional<bool> { return all_quaternion(p.coeffs); },
          [](const PowerSeriesTerm& s) -> std::optional<bool> { return all_quaternion(s.coeffs); },
          [](const ResolventKernelTerm& k) -> std::optional<bool> { return k.coeff.is_quaternion(); },
          [&](const SumTerm& s) { return all_certified(s.terms); },
          [&](const ProductTerm& p) { return all_certified(p.factors); },
          [](const ClosureTerm&) -> std::optional<bool> { return std::nullopt; },
      },
      *term_);
}

StemFunction StemFunction::derivative(int n) const {
  if (n < 0) throw Error(Errc::InvalidArgument, "derivative order must be >= 0");
  if (n == 0) return *this;
  if (n > 1) return derivative(1).derivative(n - 1);
  return std::visit(
      Overloaded{
          [&](const PolynomialTerm& p) { return polynomial(differentiate(p.coeffs), domain_); },
          [&](const PowerSeriesTerm& s) {
            return power_series(differentiate(s.coeffs), s.center, s.radius, domain_);
          },
          [&](const ResolventKernelTerm& k) {
            return resolvent_kernel(k.pole, domain_, k.order + 1, -static_cast<double>(k.order) * k.coeff);
          },
          [&](const SumTerm& s) {
            std::vector<StemFunction> d;
            for (const auto& t : s.terms) d.push_back(t.derivative(1));
            return sum(std::move(d), domain_);
          },
          [&](const ProductTerm& p) {
            // Leibniz rule with the factor order preserved.
            std::vector<StemFunction> terms;
            for (std::size_t i = 0; i < p.factors.size(); ++i) {
              std::vector<StemFunction> f = p.factors;
              f[i] = f[i].derivative(1);
              terms.push_back(product(std::move(f), domain_));
            }
            return sum(std::move(terms), domain_);
          },
          [&](const ClosureTerm& c) -> StemFunction {
            throw Error(Errc::DerivativeUnavailable, "closure '" + c.label + "' has no symbolic derivative");
          },
      },
      *term_);
}

std::vector<Biquaternion> StemFunction::taylor_coefficients(Complex s0, int count) const {
  if (count < 0) throw Error(Errc::InvalidArgument, "negative coefficient count");
  return std::visit(
      Overloaded{
          [&](const PolynomialTerm& p) {
            auto c = taylor_shift(p.coeffs, s0);
            resize_to(c, count);
            return c;
          },
          [&](const PowerSeriesTerm& s) {
            auto c = taylor_shift(s.coeffs, s0 - s.center);
            resize_to(c, count);
            return c;
          },
          [&](const ResolventKernelTerm& k) {
            const auto a = kernel_series(k.pole, k.order, s0, count);
            const auto b = k.pole.imag() == 0.0 ? a : kernel_series(std::conj(k.pole), k.order, s0, count);
            std::vector<Biquaternion> c(static_cast<std::size_t>(count));
            for (std::size_t n = 0; n < c.size(); ++n) c[n] = k.coeff * (0.5 * (a[n] + b[n]));
            return c;
          },
          [&](const SumTerm& s) {
            std::vector<Biquaternion> c(static_cast<std::size_t>(count));
            for (const auto& t : s.terms) {
              const auto tc = t.taylor_coefficients(s0, count);
              for (std::size_t n = 0; n < c.size(); ++n) c[n] += tc[n];
            }
            return c;
          },
          [&](const ProductTerm& p) {
            std::vector<Biquaternion> c = p.factors.front().taylor_coefficients(s0, count);
            for (std::size_t f = 1; f < p.factors.size(); ++f) {
              const auto b = p.factors[f].taylor_coefficients(s0, count);
              std::vector<Biquaternion> next(c.size());
              for (std::size_t n = 0; n < c.size(); ++n)
                for (std::size_t j = 0; j <= n; ++j) next[n] += c[j] * b[n - j];
              c = std::move(next);
            }
            return c;
          },
          [&](const ClosureTerm& c) -> std::vector<Biquaternion> {
            throw Error(Errc::DerivativeUnavailable, "closure '" + c.label + "' has no Taylor expansion");
          },
      },
      *term_);
}

double StemFunction::analytic_radius(Complex s0) const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  auto min_over = [&](const std::vector<StemFunction>& fs) {
    double r = inf;
    for (const auto& f : fs) r = std::min(r, f.analytic_radius(s0));
    return r;
  };
  return std::visit(
      Overloaded{
          [&](const PolynomialTerm&) { return inf; },
          [&](const PowerSeriesTerm& s) { return s.radius - std::abs(s0 - s.center); },
          [&](const ResolventKernelTerm& k) {
            return std::min(std::abs(s0 - k.pole), std::abs(s0 - std::conj(k.pole)));
          },
          [&](const SumTerm& s) { return min_over(s.terms); },
          [&](const ProductTerm& p) { return min_over(p.factors); },
          [&](const ClosureTerm&) { return 0.0; },
      },
      *term_);
}

StemFunction operator+(const StemFunction& a, const StemFunction& b) { return StemFunction::sum({a, b}); }

StemFunction operator*(const StemFunction& a, const StemFunction& b) {
  return StemFunction::product({a, b});
}

StemFunction operator*(const Biquaternion& c, const StemFunction& f) {
  return StemFunction::product({StemFunction::constant(c, f.domain()), f}, f.domain());
}

namespace {

double radical_inverse(unsigned index, unsigned base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * (index % base);
    index /= base;
    f /= base;
  }
  return result;
}

}  // namespace

std::vector<Complex> halton_points(const PlaneDomain& domain, int count) {
  std::vector<Complex> pts;
  const Box box = domain.bounding_box();
  if (box.empty || count <= 0) return pts;
  const unsigned max_index = 200u * static_cast<unsigned>(count) + 1000u;
  for (unsigned i = 1; i < max_index && static_cast<int>(pts.size()) < count; ++i) {
    const Complex z{box.x_min + (box.x_max - box.x_min) * radical_inverse(i, 2),
                    box.y_min + (box.y_max - box.y_min) * radical_inverse(i, 3)};
    if (domain.contains(z) && domain.contains(std::conj(z))) pts.push_back(z);
  }
  return pts;
}

StemReport verify_stem_report(const StemFunction& f, int grid_points, double tol) {
  if (grid_points < 1) throw Error(Errc::InvalidArgument, "grid_points must be >= 1");
  if (const auto c = f.certified_stem()) return {*c, true, 0, 0.0};
  StemReport report;
  for (const Complex z : halton_points(f.domain(), grid_points)) {
    const Biquaternion fz = f(z);
    const double r = cstar_norm(f(std::conj(z)) - bar(fz)) / (1.0 + cstar_norm(fz));
    report.max_residual = std::max(report.max_residual, r);
    ++report.points_checked;
  }
  report.pass = report.max_residual <= tol;
  return report;
}

bool verify_stem(const StemFunction& f, int grid_points, double tol) {
  return verify_stem_report(f, grid_points, tol).pass;
}

}  // namespace qcalc
