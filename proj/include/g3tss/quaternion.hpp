#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Core>

#include "g3tss/multivector.hpp"
#include "g3tss/rotor.hpp"

namespace g3 {

/// Hamilton quaternion q0 + q1 i + q2 j + q3 k.
template <typename Scalar>
struct Quaternion {
  Scalar q0{0};
  Scalar q1{0};
  Scalar q2{0};
  Scalar q3{0};

  Quaternion() = default;
  Quaternion(Scalar w, Scalar x, Scalar y, Scalar z) : q0(w), q1(x), q2(y), q3(z) {
    using std::isfinite;
    if (!isfinite(q0) || !isfinite(q1) || !isfinite(q2) || !isfinite(q3)) {
      throw std::invalid_argument("Quaternion: coefficients must be finite");
    }
  }

  Scalar magnitude() const { return std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3); }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
            a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
            a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
            a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0};
  }
};

using Quaterniond = Quaternion<double>;

/// i -> -e23, j -> -e31, k -> -e12. An algebra isomorphism onto the even
/// subalgebra.
template <typename Scalar>
Multivector<Scalar> quaternion_embed(const Quaternion<Scalar>& q) {
  typename Multivector<Scalar>::Coeffs c = Multivector<Scalar>::Coeffs::Zero();
  c[0] = q.q0;
  c[4] = -q.q1;
  c[5] = -q.q2;
  c[6] = -q.q3;
  return Multivector<Scalar>(c);
}

template <typename Scalar>
struct PolarForm {
  Scalar magnitude;
  Eigen::Matrix<Scalar, 3, 1> axis;
  Scalar angle;  // radians, in [0, 2pi]
};

/// q = |q| exp(-i n alpha / 2) with alpha = 2 atan2(|n|, q0).
///
/// A pure scalar has no distinguished axis; e3 is reported. A negative pure
/// scalar sits on the boundary alpha = 2pi, which is returned as-is.
template <typename Scalar>
PolarForm<Scalar> quaternion_polar(const Quaternion<Scalar>& q) {
  const Scalar magnitude = q.magnitude();
  if (magnitude == Scalar(0)) {
    throw std::invalid_argument("quaternion_polar: zero quaternion has no polar form");
  }
  const Eigen::Matrix<Scalar, 3, 1> n(q.q1, q.q2, q.q3);
  const Scalar n_norm = n.norm();
  if (n_norm == Scalar(0)) {
    const Scalar angle = q.q0 > Scalar(0) ? Scalar(0) : Scalar(2) * std::numbers::pi_v<Scalar>;
    return {magnitude, Eigen::Matrix<Scalar, 3, 1>::UnitZ(), angle};
  }
  using std::atan2;
  return {magnitude, n / n_norm, Scalar(2) * atan2(n_norm, q.q0)};
}

/// magnitude * exp(-i axis angle / 2).
template <typename Scalar>
Multivector<Scalar> from_polar(const PolarForm<Scalar>& p) {
  return p.magnitude * rotor_axis_angle(p.axis, p.angle).multivector();
}

}  // namespace g3
