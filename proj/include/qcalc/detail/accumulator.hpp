#pragma once

#include <array>
#include <cmath>

#include "qcalc/biquaternion.hpp"

namespace qcalc::detail {

// Neumaier-compensated running sum over the eight real components. Summation
// order is the call order, so results are reproducible for a fixed node count.
class BiquaternionAccumulator {
 public:
  void add(const Biquaternion& v) {
    const std::array<double, 8> c = components(v);
    for (std::size_t n = 0; n < 8; ++n) {
      const double t = sum_[n] + c[n];
      if (std::abs(sum_[n]) >= std::abs(c[n]))
        comp_[n] += (sum_[n] - t) + c[n];
      else
        comp_[n] += (c[n] - t) + sum_[n];
      sum_[n] = t;
    }
  }

  Biquaternion total() const {
    std::array<double, 8> r{};
    for (std::size_t n = 0; n < 8; ++n) r[n] = sum_[n] + comp_[n];
    return {{r[0], r[1], r[2], r[3]}, {r[4], r[5], r[6], r[7]}};
  }

 private:
  static std::array<double, 8> components(const Biquaternion& v) {
    return {v.re.w, v.re.x, v.re.y, v.re.z, v.im.w, v.im.x, v.im.y, v.im.z};
  }

  std::array<double, 8> sum_{};
  std::array<double, 8> comp_{};
};

}  // namespace qcalc::detail
