#pragma once

#include <cmath>
#include <iosfwd>
#include <stdexcept>

namespace sliceball {

/// Element of the quaternion algebra H, written q = w + x i + y j + z k.
///
/// Plain value type: all arithmetic is component-wise double precision and
/// every operation is reentrant. The multiplication follows the usual basis
/// rules i^2 = j^2 = k^2 = ijk = -1, so products are associative but not
/// commutative.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  /// Embeds a real scalar as w + 0i + 0j + 0k.
  constexpr explicit Quaternion(double real) : w(real) {}

  static constexpr Quaternion zero() { return {0.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double real() const { return w; }
  /// Imaginary part x i + y j + z k as a (pure) quaternion.
  constexpr Quaternion imag() const { return {0.0, x, y, z}; }
  constexpr double imag_norm_sq() const { return x * x + y * y + z * z; }
  double imag_norm() const { return std::sqrt(imag_norm_sq()); }

  constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

  /// Multiplicative inverse |q|^-2 conj(q). Throws std::domain_error on the
  /// zero quaternion.
  Quaternion inverse() const;

  bool is_finite() const {
    return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) &&
           std::isfinite(z);
  }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& r) {
    w += r.w;
    x += r.x;
    y += r.y;
    z += r.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& r) {
    w -= r.w;
    x -= r.x;
    y -= r.y;
    z -= r.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) {
    w /= s;
    x /= s;
    y /= s;
    z /= s;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) {
    return a += b;
  }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) {
    return a -= b;
  }
  friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
  friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
  friend constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

  // Hamilton product.
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// 4-D Euclidean inner product of the component vectors.
constexpr double dot4(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double distance_between(const Quaternion& a, const Quaternion& b) {
  return (a - b).norm();
}

/// Unit purely imaginary quaternion: an element of the 2-sphere
/// S = { q : q^2 = -1 }. Construction enforces Re = 0 and |u| = 1 within
/// 1e-12; use normalized() to build one from any nonzero pure quaternion.
class ImaginaryUnit {
 public:
  static constexpr double kTolerance = 1e-12;

  explicit ImaginaryUnit(const Quaternion& u) : u_(u) {
    if (std::abs(u.w) > kTolerance || std::abs(u.norm() - 1.0) > kTolerance) {
      throw std::domain_error("ImaginaryUnit: not a unit pure quaternion");
    }
    u_.w = 0.0;
  }

  /// Rescales a nonzero pure quaternion to unit length.
  static ImaginaryUnit normalized(const Quaternion& pure) {
    const double n = pure.imag_norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw std::domain_error("ImaginaryUnit: zero imaginary part");
    }
    return ImaginaryUnit(Quaternion{0.0, pure.x / n, pure.y / n, pure.z / n},
                         unchecked{});
  }

  static ImaginaryUnit i() { return ImaginaryUnit(Quaternion::i(), unchecked{}); }
  static ImaginaryUnit j() { return ImaginaryUnit(Quaternion::j(), unchecked{}); }
  static ImaginaryUnit k() { return ImaginaryUnit(Quaternion::k(), unchecked{}); }

  const Quaternion& value() const { return u_; }

 private:
  struct unchecked {};
  ImaginaryUnit(const Quaternion& u, unchecked) : u_(u) {}
  Quaternion u_;
};

/// cos(theta) + I sin(theta), the slice exponential on C_I.
inline Quaternion exp_I(const ImaginaryUnit& I, double theta) {
  return Quaternion(std::cos(theta)) + I.value() * std::sin(theta);
}

/// Euclidean ball B(center, radius) in H.
struct Ball {
  Quaternion center;
  double radius = 0.0;

  Ball(const Quaternion& c, double r) : center(c), radius(r) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw std::domain_error("Ball: radius must be non-negative and finite");
    }
  }

  bool contains(const Quaternion& q, double tol = 0.0) const {
    return distance_between(q, center) <= radius + tol;
  }
};

/// q = x + y I with y = |Im q| >= 0. For (numerically) real q the axis is
/// the conventional choice I = i.
struct SliceDecomposition {
  double x;
  double y;
  ImaginaryUnit axis;
};

SliceDecomposition decompose(const Quaternion& q);

/// True iff p and q lie on the same 2-sphere x + y*S, i.e. share real part
/// and imaginary modulus within the tolerance.
bool same_sphere(const Quaternion& p, const Quaternion& q, double tol = 1e-10);

}  // namespace sliceball
