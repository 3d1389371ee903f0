#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcalc/biquaternion.hpp"
#include "qcalc/domain.hpp"

namespace qcalc {

class StemFunction;

// sum_n coeffs[n] zeta^n
struct PolynomialTerm {
  std::vector<Biquaternion> coeffs;
};

// sum_n coeffs[n] (zeta - center)^n, truncated, declared convergent for
// |zeta - center| < radius.
struct PowerSeriesTerm {
  std::vector<Biquaternion> coeffs;
  double center = 0.0;
  double radius = 0.0;
};

// coeff * ((zeta - pole)^-order + (zeta - conj(pole))^-order) / 2. Pairing the
// pole with its conjugate keeps the scalar factor a stem function.
struct ResolventKernelTerm {
  Complex pole;
  int order = 1;
  Biquaternion coeff{1.0};
};

struct SumTerm {
  std::vector<StemFunction> terms;
};

// Pointwise product, factors multiplied left to right.
struct ProductTerm {
  std::vector<StemFunction> factors;
};

// Black-box function; not analytic as far as the library is concerned.
struct ClosureTerm {
  std::function<Biquaternion(Complex)> fn;
  std::string label;
};

using StemTerm =
    std::variant<PolynomialTerm, PowerSeriesTerm, ResolventKernelTerm, SumTerm, ProductTerm, ClosureTerm>;

// Immutable M-valued function on an open plane domain.
class StemFunction {
 public:
  static StemFunction polynomial(std::vector<Biquaternion> coeffs, PlaneDomain domain);
  static StemFunction constant(const Biquaternion& value, PlaneDomain domain);
  static StemFunction power_series(std::vector<Biquaternion> coeffs, double center, double radius,
                                   PlaneDomain domain);
  static StemFunction resolvent_kernel(Complex pole, PlaneDomain domain, int order = 1,
                                       const Biquaternion& coeff = Biquaternion(1.0));
  // Composite domain defaults to the first operand's domain.
  static StemFunction sum(std::vector<StemFunction> terms, std::optional<PlaneDomain> domain = std::nullopt);
  static StemFunction product(std::vector<StemFunction> factors,
                              std::optional<PlaneDomain> domain = std::nullopt);
  static StemFunction closure(std::function<Biquaternion(Complex)> fn, PlaneDomain domain,
                              std::string label, bool declared_stem);

  // Truncated Taylor series of exp about 0 (coefficients 1/n!, infinite radius).
  static StemFunction exp_series(PlaneDomain domain, int terms = 40);
  // sum_{n < terms} zeta^n with radius 1.
  static StemFunction geometric_series(PlaneDomain domain, int terms = 200);

  // Throws OutOfDomain outside the domain, SeriesDivergence outside a
  // power series' disk of convergence.
  Biquaternion operator()(Complex lambda) const;

  const StemTerm& term() const { return *term_; }
  const PlaneDomain& domain() const { return domain_; }
  bool declared_stem() const { return declared_stem_; }
  StemFunction with_declared_stem(bool stem) const;
  StemFunction with_domain(PlaneDomain domain) const;

  // True when no black-box closure is involved.
  bool is_analytic() const;

  // Exact coefficient-level answer when one is available: polynomial,
  // power-series and kernel specs are stem iff all coefficients lie in H.
  std::optional<bool> certified_stem() const;

  // Symbolic n-th derivative; throws DerivativeUnavailable for closures.
  StemFunction derivative(int n = 1) const;

  // F^(n)(s0) / n! for n < count; throws DerivativeUnavailable for closures.
  std::vector<Biquaternion> taylor_coefficients(Complex s0, int count) const;

  // Radius of the largest disk about s0 on which the formula itself stays
  // analytic, ignoring the domain (infinite for polynomials).
  double analytic_radius(Complex s0) const;

 private:
  StemFunction(std::shared_ptr<const StemTerm> term, PlaneDomain domain, bool declared_stem)
      : term_(std::move(term)), domain_(std::move(domain)), declared_stem_(declared_stem) {}

  Biquaternion eval_raw(Complex lambda) const;

  std::shared_ptr<const StemTerm> term_;
  PlaneDomain domain_;
  bool declared_stem_ = false;
};

StemFunction operator+(const StemFunction& a, const StemFunction& b);
StemFunction operator*(const StemFunction& a, const StemFunction& b);
// Constant left factor c * F.
StemFunction operator*(const Biquaternion& c, const StemFunction& f);

inline Biquaternion evaluate(const StemFunction& f, Complex lambda) { return f(lambda); }

struct StemReport {
  bool pass = false;
  bool certified = false;  // decided from coefficients rather than sampling
  int points_checked = 0;
  double max_residual = 0.0;
};

inline constexpr int kDefaultStemGridPoints = 257;

// Checks F(conj l) == bar(F(l)) on a Halton grid over the domain, relative to
// 1 + ||F(l)||; polynomial-type specs are decided from their coefficients.
StemReport verify_stem_report(const StemFunction& f, int grid_points = kDefaultStemGridPoints,
                              double tol = 1e-12);
bool verify_stem(const StemFunction& f, int grid_points = kDefaultStemGridPoints, double tol = 1e-12);

// Deterministic low-discrepancy points of the domain whose conjugates are
// also in the domain.
std::vector<Complex> halton_points(const PlaneDomain& domain, int count);

}  // namespace qcalc
