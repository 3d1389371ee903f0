#include "qcalc/quaternion.hpp"

#include <ostream>

#include "qcalc/error.hpp"

namespace qcalc {

Quaternion inverse(const Quaternion& q) {
  const double n2 = norm_squared(q);
  if (n2 == 0.0) throw Error(Errc::ZeroDivision, "inverse of the zero quaternion");
  return involution(q) * (1.0 / n2);
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << "j, " << q.y << "k, " << q.z << "l)";
}

}  // namespace qcalc
