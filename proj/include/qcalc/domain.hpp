#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "qcalc/quaternion.hpp"

namespace qcalc {

struct Disk {
  Complex center;
  double radius = 0.0;
  friend bool operator==(const Disk&, const Disk&) = default;
};

struct Rect {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  friend bool operator==(const Rect&, const Rect&) = default;
};

using Piece = std::variant<Disk, Rect>;

struct Box {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  bool empty = true;
};

// Open subset of the plane given as a finite union of open disks and open
// axis-aligned rectangles.
class PlaneDomain {
 public:
  PlaneDomain() = default;
  explicit PlaneDomain(std::vector<Piece> pieces);

  static PlaneDomain disk(Complex center, double radius) { return PlaneDomain({Disk{center, radius}}); }
  static PlaneDomain rect(double x_min, double x_max, double y_min, double y_max) {
    return PlaneDomain({Rect{x_min, x_max, y_min, y_max}});
  }

  bool contains(Complex lambda) const;

  // Largest margin by which lambda sits inside a single piece: positive
  // inside, zero on a piece boundary, negative outside every piece. For a
  // point inside, the open disk of that radius lies in the domain.
  double signed_margin(Complex lambda) const;

  // Every piece is self-conjugate or has its mirror image among the pieces.
  bool is_conjugate_symmetric() const;

  Box bounding_box() const;

  const std::vector<Piece>& pieces() const { return pieces_; }

 private:
  std::vector<Piece> pieces_;
};

Piece mirror(const Piece& piece);

// Union of the domain with its complex-conjugate image.
PlaneDomain symmetrize(const PlaneDomain& domain);

// S_H = { q : sigma(q) subset of S } for a conjugate-symmetric plane set S.
class SaturatedSet {
 public:
  const PlaneDomain& base() const { return base_; }

  // Membership through s_+(q) alone; sufficient because the base is
  // conjugate symmetric and s_- = conj(s_+).
  bool contains(const Quaternion& q) const;

  friend SaturatedSet saturate(const PlaneDomain& domain);

 private:
  explicit SaturatedSet(PlaneDomain base) : base_(std::move(base)) {}
  PlaneDomain base_;
};

// Throws NotSymmetric when the domain is not conjugate symmetric.
SaturatedSet saturate(const PlaneDomain& domain);

// Arbitrary quaternionic set given by a membership predicate, with the
// (Re q, ||Im q||) box to draw candidate members from.
struct QuaternionSet {
  std::function<bool(const Quaternion&)> contains;
  double re_min = 0.0;
  double re_max = 0.0;
  double imag_max = 0.0;
};

QuaternionSet as_quaternion_set(const SaturatedSet& set);

// Draws members u + v s and checks that u + v s' is a member for a random
// s' on the unit sphere of imaginary quaternions. Vacuously true when no
// non-real member is found.
bool is_axially_symmetric_sample(const QuaternionSet& set, int samples, std::uint64_t rng_seed);
bool is_axially_symmetric_sample(const SaturatedSet& set, int samples, std::uint64_t rng_seed);

}  // namespace qcalc
