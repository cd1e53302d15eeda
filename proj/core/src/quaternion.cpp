#include "sliceball/quaternion.hpp"

#include <cmath>
#include <ostream>

namespace sliceball {

Quaternion Quaternion::inverse() const {
  const double n2 = norm_sq();
  if (!(n2 > 0.0)) {
    throw std::domain_error("zero quaternion");
  }
  return conj() / n2;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

SliceDecomposition decompose(const Quaternion& q) {
  const double y = q.imag_norm();
  if (y < 1e-14) {
    // Degenerate direction: the conventional axis is i.
    return SliceDecomposition{q.w, y, ImaginaryUnit::i()};
  }
  return SliceDecomposition{q.w, y, ImaginaryUnit::normalized(q.imag())};
}

bool same_sphere(const Quaternion& p, const Quaternion& q, double tol) {
  return std::abs(p.real() - q.real()) <= tol &&
         std::abs(p.imag_norm() - q.imag_norm()) <= tol;
}

}  // namespace sliceball
