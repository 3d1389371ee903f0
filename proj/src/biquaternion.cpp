#include "qcalc/biquaternion.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace qcalc {

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (std::size_t i = 0; i < 4; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

Mat2 adjoint(const Mat2& a) {
  return {{std::conj(a(0, 0)), std::conj(a(1, 0)), std::conj(a(0, 1)), std::conj(a(1, 1))}};
}

Complex determinant(const Mat2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

double max_abs_entry(const Mat2& a) {
  double r = 0.0;
  for (const auto& c : a.m) r = std::max(r, std::abs(c));
  return r;
}

namespace {

// w + x j + y k + z l  ->  [[w + i x, y + i z], [-y + i z, w - i x]]
Mat2 quaternion_rep(const Quaternion& q) {
  return {{Complex{q.w, q.x}, Complex{q.y, q.z}, Complex{-q.y, q.z}, Complex{q.w, -q.x}}};
}

}  // namespace

Mat2 matrix_rep(const Biquaternion& a) {
  const Mat2 b = quaternion_rep(a.re);
  const Mat2 c = quaternion_rep(a.im);
  const Complex i{0.0, 1.0};
  Mat2 r;
  for (std::size_t n = 0; n < 4; ++n) r.m[n] = b.m[n] + i * c.m[n];
  return r;
}

double spectral_norm(const Mat2& m) {
  // Scaled to unit max entry so the squares below cannot overflow.
  const double scale = max_abs_entry(m);
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  Mat2 a = m;
  for (auto& e : a.m) e /= scale;
  // Eigenvalues of the Hermitian matrix A^H A = [[p, r], [conj(r), s]].
  const double p = std::norm(a(0, 0)) + std::norm(a(1, 0));
  const double s = std::norm(a(0, 1)) + std::norm(a(1, 1));
  const Complex r = std::conj(a(0, 0)) * a(0, 1) + std::conj(a(1, 0)) * a(1, 1);
  const double half_gap = 0.5 * (p - s);
  const double lambda_max = 0.5 * (p + s) + std::hypot(half_gap, std::abs(r));
  return scale * std::sqrt(std::max(lambda_max, 0.0));
}

double cstar_norm(const Biquaternion& a) { return spectral_norm(matrix_rep(a)); }

double max_abs_component(const Biquaternion& a) {
  return std::max({std::abs(a.re.w), std::abs(a.re.x), std::abs(a.re.y), std::abs(a.re.z),
                   std::abs(a.im.w), std::abs(a.im.x), std::abs(a.im.y), std::abs(a.im.z)});
}

std::ostream& operator<<(std::ostream& os, const Biquaternion& a) {
  return os << a.re << " + i" << a.im;
}

}  // namespace qcalc
