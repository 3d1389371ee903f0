#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qcalc/functional_calculus.hpp"

namespace qcalc {

// Function of q = x + y s given slice by slice. eval(x, y, s) and
// eval(x, -y, -s) describe the same quaternion and must agree.
struct SliceFunction {
  std::function<Biquaternion(double x, double y, const UnitImaginary& s)> eval;
  SaturatedSet domain;
};

// x + y s for a unit imaginary s.
inline Quaternion on_slice(double x, double y, const UnitImaginary& s) { return Quaternion(x) + y * s.value(); }

SliceFunction slice_function_of(const StemFunction& f);
SliceFunction slice_function_of(std::function<Biquaternion(const Quaternion&)> g, SaturatedSet domain);

// The fixed slices j, k, l, (j + k)/sqrt2, (j + k + l)/sqrt3.
const std::vector<UnitImaginary>& standard_slices();

// 1/2 (d/dx + R_s d/dy) F(x + y s) by central differences of step h, with R_s
// the right multiplication by s. Throws StencilOutsideDomain.
Biquaternion dbar_s(const SliceFunction& f, double x, double y, const UnitImaginary& s, double h);

inline constexpr double kDefaultDbarStep = 1e-5;
inline constexpr double kDefaultDbarTol = 1e-7;

struct SliceRegularityReport {
  double max_residual = 0.0;
  double h = kDefaultDbarStep;
  int samples = 0;  // stencil evaluations performed
  bool pass = false;
};

// Evaluates dbar_s at `samples` seeded points on each standard slice (plus
// `extra_random_slices` seeded random directions); PASS iff the largest
// C*-norm residual is <= tol.
SliceRegularityReport check_slice_regular(const SliceFunction& f, int samples, double h = kDefaultDbarStep,
                                          double tol = kDefaultDbarTol, std::uint64_t seed = 0,
                                          int extra_random_slices = 0);

struct RepresentationSides {
  Biquaternion lhs;  // F(x +- i y)
  Biquaternion rhs;  // F_H(x +- y s)(1 -+ i s)/2 + F_H(x -+ y s)(1 +- i s)/2
};

// sign = +1 or -1 selects the upper or lower signs. Throws OutOfDomain.
RepresentationSides representation_formula(const StemFunction& f, double x, double y, const UnitImaginary& s,
                                           int sign = +1);

struct ReconstructOptions {
  double h = kDefaultDbarStep;
  double tol = kDefaultDbarTol;
  int check_points = 32;
  std::uint64_t seed = 0;
};

// F(x + i y) = [psi(x + y s)(1 - i s) + psi(x - y s)(1 + i s)] / 2, using psi on
// the single slice s. Checks dbar_{+s} psi = dbar_{-s} psi = 0 on sampled points,
// relative to 1 + ||psi||, and throws NotSliceHolomorphic when that fails. The result is a
// closure spec: admissible for fc_eval and verify_stem, not for the Cauchy
// transform.
StemFunction reconstruct_stem_from_slice(const SliceFunction& psi, const UnitImaginary& s,
                                         const PlaneDomain& domain, const ReconstructOptions& options = {});

struct SliceReconstructionReport {
  Quaternion slice;
  bool reconstructed = false;  // dbar precheck passed
  bool stem = false;           // reconstruction passes verify_stem
  double max_roundtrip = 0.0;  // against F_H on the other standard slices
};

struct EquivalenceReport {
  SliceRegularityReport regular;
  std::vector<SliceReconstructionReport> slices;
  double max_roundtrip = 0.0;
  bool pass = false;
};

struct EquivalenceOptions {
  double h = kDefaultDbarStep;
  double regular_tol = kDefaultDbarTol;
  double roundtrip_tol = 1e-9;
  double stem_tol = 1e-10;
  std::uint64_t seed = 0;
};

// Slice regularity of F_H, then reconstruction from each of the slices j, k,
// (j + k + l)/sqrt3 compared with F_H on the remaining standard slices.
EquivalenceReport equivalence_harness(const StemFunction& f, int samples, const EquivalenceOptions& options = {});

}  // namespace qcalc
