#include "qcalc/domain.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "qcalc/error.hpp"
#include "qcalc/spectral.hpp"

namespace qcalc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

bool piece_contains(const Piece& piece, Complex z) {
  return std::visit(Overloaded{
                        [&](const Disk& d) { return std::abs(z - d.center) < d.radius; },
                        [&](const Rect& r) {
                          return r.x_min < z.real() && z.real() < r.x_max && r.y_min < z.imag() &&
                                 z.imag() < r.y_max;
                        },
                    },
                    piece);
}

double piece_margin(const Piece& piece, Complex z) {
  return std::visit(Overloaded{
                        [&](const Disk& d) { return d.radius - std::abs(z - d.center); },
                        [&](const Rect& r) {
                          const double dx = std::max(r.x_min - z.real(), z.real() - r.x_max);
                          const double dy = std::max(r.y_min - z.imag(), z.imag() - r.y_max);
                          if (dx <= 0.0 && dy <= 0.0) return -std::max(dx, dy);
                          return -std::hypot(std::max(dx, 0.0), std::max(dy, 0.0));
                        },
                    },
                    piece);
}

bool self_conjugate(const Piece& piece) { return mirror(piece) == piece; }

}  // namespace

PlaneDomain::PlaneDomain(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  for (const auto& p : pieces_) {
    const bool ok = std::visit(Overloaded{
                                   [](const Disk& d) { return d.radius > 0.0; },
                                   [](const Rect& r) { return r.x_min < r.x_max && r.y_min < r.y_max; },
                               },
                               p);
    if (!ok) throw Error(Errc::InvalidArgument, "degenerate domain piece");
  }
}

bool PlaneDomain::contains(Complex lambda) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const Piece& p) { return piece_contains(p, lambda); });
}

double PlaneDomain::signed_margin(Complex lambda) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : pieces_) best = std::max(best, piece_margin(p, lambda));
  return best;
}

bool PlaneDomain::is_conjugate_symmetric() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [&](const Piece& p) {
    return self_conjugate(p) || std::find(pieces_.begin(), pieces_.end(), mirror(p)) != pieces_.end();
  });
}

Box PlaneDomain::bounding_box() const {
  Box box;
  for (const auto& p : pieces_) {
    const std::array<double, 4> b = std::visit(
        Overloaded{
            [](const Disk& d) {
              return std::array<double, 4>{d.center.real() - d.radius, d.center.real() + d.radius,
                                           d.center.imag() - d.radius, d.center.imag() + d.radius};
            },
            [](const Rect& r) { return std::array<double, 4>{r.x_min, r.x_max, r.y_min, r.y_max}; },
        },
        p);
    if (box.empty) {
      box = {b[0], b[1], b[2], b[3], false};
    } else {
      box.x_min = std::min(box.x_min, b[0]);
      box.x_max = std::max(box.x_max, b[1]);
      box.y_min = std::min(box.y_min, b[2]);
      box.y_max = std::max(box.y_max, b[3]);
    }
  }
  return box;
}

Piece mirror(const Piece& piece) {
  return std::visit(Overloaded{
                        [](const Disk& d) -> Piece { return Disk{std::conj(d.center), d.radius}; },
                        [](const Rect& r) -> Piece { return Rect{r.x_min, r.x_max, -r.y_max, -r.y_min}; },
                    },
                    piece);
}

PlaneDomain symmetrize(const PlaneDomain& domain) {
  std::vector<Piece> pieces = domain.pieces();
  for (const auto& p : domain.pieces()) {
    const Piece m = mirror(p);
    if (std::find(pieces.begin(), pieces.end(), m) == pieces.end()) pieces.push_back(m);
  }
  return PlaneDomain(std::move(pieces));
}

bool SaturatedSet::contains(const Quaternion& q) const { return base_.contains(spectrum_of(q).s_plus); }

SaturatedSet saturate(const PlaneDomain& domain) {
  if (!domain.is_conjugate_symmetric())
    throw Error(Errc::NotSymmetric, "saturation needs a conjugate-symmetric domain");
  return SaturatedSet(domain);
}

QuaternionSet as_quaternion_set(const SaturatedSet& set) {
  const Box b = set.base().bounding_box();
  if (b.empty) return {[](const Quaternion&) { return false; }, 0.0, 0.0, 0.0};
  return {[set](const Quaternion& q) { return set.contains(q); }, b.x_min, b.x_max,
          std::max(std::abs(b.y_min), std::abs(b.y_max))};
}

namespace {

Quaternion random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    const Quaternion v{0.0, gauss(rng), gauss(rng), gauss(rng)};
    const double n = imag_norm(v);
    if (n > 1e-6) return v / n;
  }
}

}  // namespace

bool is_axially_symmetric_sample(const QuaternionSet& set, int samples, std::uint64_t rng_seed) {
  if (samples < 1) throw Error(Errc::InvalidArgument, "samples must be >= 1");
  static const std::array<Quaternion, 5> kFixed = {
      Quaternion::j(), Quaternion::k(), Quaternion::l(),
      Quaternion{0, 1, 1, 0} / std::sqrt(2.0), Quaternion{0, 1, 1, 1} / std::sqrt(3.0)};

  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int found = 0;
  const long max_attempts = 200L * samples;
  for (long attempt = 0; attempt < max_attempts && found < samples; ++attempt) {
    const double u = set.re_min + (set.re_max - set.re_min) * unit(rng);
    const double v = set.imag_max * unit(rng);
    const Quaternion s = attempt % 2 == 0 ? kFixed[static_cast<std::size_t>(attempt / 2) % kFixed.size()]
                                          : random_direction(rng);
    if (v == 0.0 || !set.contains(u + v * s)) continue;
    ++found;
    const Quaternion s2 = random_direction(rng);
    if (!set.contains(u + v * s2)) return false;
  }
  return true;
}

bool is_axially_symmetric_sample(const SaturatedSet& set, int samples, std::uint64_t rng_seed) {
  return is_axially_symmetric_sample(as_quaternion_set(set), samples, rng_seed);
}

}  // namespace qcalc
