#pragma once

#include <array>
#include <iosfwd>

#include "qcalc/quaternion.hpp"

namespace qcalc {

// Element b + i c of the complexified algebra H + iH. The external unit i
// commutes with every quaternion.
struct Biquaternion {
  Quaternion re;
  Quaternion im;

  constexpr Biquaternion() = default;
  constexpr Biquaternion(const Quaternion& re_, const Quaternion& im_) : re(re_), im(im_) {}
  constexpr Biquaternion(const Quaternion& q) : re(q) {}  // NOLINT(google-explicit-constructor)
  constexpr Biquaternion(double s) : re(s) {}             // NOLINT(google-explicit-constructor)
  constexpr Biquaternion(Complex c) : re(c.real()), im(c.imag()) {}  // NOLINT(google-explicit-constructor)

  // The external imaginary unit i*1.
  static constexpr Biquaternion i() { return {Quaternion{}, Quaternion{1.0}}; }

  constexpr bool is_quaternion() const { return im == Quaternion{}; }

  constexpr Biquaternion& operator+=(const Biquaternion& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  constexpr Biquaternion& operator-=(const Biquaternion& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  constexpr Biquaternion& operator*=(double s) {
    re *= s;
    im *= s;
    return *this;
  }

  friend constexpr bool operator==(const Biquaternion&, const Biquaternion&) = default;
};

constexpr Biquaternion operator+(Biquaternion a, const Biquaternion& b) { return a += b; }
constexpr Biquaternion operator-(Biquaternion a, const Biquaternion& b) { return a -= b; }
constexpr Biquaternion operator-(const Biquaternion& a) { return {-a.re, -a.im}; }
constexpr Biquaternion operator*(Biquaternion a, double s) { return a *= s; }
constexpr Biquaternion operator*(double s, Biquaternion a) { return a *= s; }

// (b1 + i c1)(b2 + i c2) = (b1 b2 - c1 c2) + i (b1 c2 + c1 b2)
constexpr Biquaternion operator*(const Biquaternion& a, const Biquaternion& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// Complex scalars are central, so the side does not matter.
constexpr Biquaternion operator*(Complex c, const Biquaternion& a) {
  return {c.real() * a.re - c.imag() * a.im, c.real() * a.im + c.imag() * a.re};
}
constexpr Biquaternion operator*(const Biquaternion& a, Complex c) { return c * a; }

// Conjugation with respect to the external unit: b + i c -> b - i c.
constexpr Biquaternion bar(const Biquaternion& a) { return {a.re, -a.im}; }

// Involution (x1 + i x2)* = x1* - i x2*.
constexpr Biquaternion star(const Biquaternion& a) { return {involution(a.re), -involution(a.im)}; }

// 2x2 complex matrix stored row-major.
struct Mat2 {
  std::array<Complex, 4> m{};

  constexpr Complex operator()(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }
  constexpr Complex& operator()(int r, int c) { return m[static_cast<std::size_t>(2 * r + c)]; }

  static constexpr Mat2 identity() { return {{Complex{1}, Complex{0}, Complex{0}, Complex{1}}}; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 adjoint(const Mat2& a);
Complex determinant(const Mat2& a);
double max_abs_entry(const Mat2& a);

// Unital *-isomorphism onto 2x2 complex matrices:
// 1 -> I, j -> diag(i, -i), k -> [[0, 1], [-1, 0]], l -> [[0, i], [i, 0]],
// extended linearly over the external unit i.
Mat2 matrix_rep(const Biquaternion& a);

// Largest singular value of a 2x2 complex matrix.
double spectral_norm(const Mat2& a);

// C*-norm of the complexified algebra, i.e. the operator norm of matrix_rep(a).
double cstar_norm(const Biquaternion& a);

// Componentwise maximum of |component| over all eight reals.
double max_abs_component(const Biquaternion& a);

std::ostream& operator<<(std::ostream& os, const Biquaternion& a);

}  // namespace qcalc
