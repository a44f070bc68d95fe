#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

#include "g3tss/multivector.hpp"

namespace g3 {

/// Accepted deviation of R * reverse(R) from 1.
inline constexpr double kRotorUnitTolerance = 1e-9;
/// Below this bivector magnitude exp_bivector uses its Taylor series.
inline constexpr double kSmallAngle = 1e-8;
inline constexpr double kUnitAxisTolerance = 1e-9;

/// Unit-norm even multivector. Acts on multivectors by R a reverse(R).
template <typename Scalar>
class Rotor {
 public:
  Rotor() : m_(Multivector<Scalar>::scalar(Scalar(1))) {}

  explicit Rotor(const Multivector<Scalar>& m) : m_(m) {
    if (!is_even(m_)) {
      throw std::invalid_argument("Rotor: odd-grade coefficients must be zero");
    }
    const Multivector<Scalar> defect = m_ * reverse(m_) - Multivector<Scalar>::scalar(Scalar(1));
    if (norm(defect) > Scalar(kRotorUnitTolerance)) {
      throw std::invalid_argument("Rotor: R*reverse(R) deviates from 1");
    }
  }

  static Rotor identity() { return Rotor(); }

  const Multivector<Scalar>& multivector() const { return m_; }
  Scalar operator[](int i) const { return m_[i]; }

  friend Rotor operator*(const Rotor& a, const Rotor& b) { return Rotor(a.m_ * b.m_); }

 private:
  Multivector<Scalar> m_;
};

using Rotord = Rotor<double>;

template <typename Scalar>
Rotor<Scalar> reverse(const Rotor<Scalar>& r) {
  return Rotor<Scalar>(reverse(r.multivector()));
}

template <typename Scalar>
Scalar norm(const Rotor<Scalar>& r) {
  return norm(r.multivector());
}

/// exp(B) = cos|B| + (B/|B|) sin|B| for a pure bivector B.
template <typename Scalar>
Rotor<Scalar> exp_bivector(const Multivector<Scalar>& bivector) {
  if (!is_bivector(bivector)) {
    throw std::invalid_argument("exp_bivector: argument must be a pure bivector");
  }
  const Scalar magnitude = norm(bivector);
  const auto one = Multivector<Scalar>::scalar(Scalar(1));
  if (magnitude < Scalar(kSmallAngle)) {
    // B^2 = -|B|^2, so the series stays even.
    const Multivector<Scalar> b2 = bivector * bivector;
    const Multivector<Scalar> b3 = b2 * bivector;
    return Rotor<Scalar>(one + bivector + Scalar(0.5) * b2 + (Scalar(1) / Scalar(6)) * b3);
  }
  using std::cos;
  using std::sin;
  return Rotor<Scalar>(cos(magnitude) * one + (sin(magnitude) / magnitude) * bivector);
}

/// exp(-i n alpha / 2): counterclockwise rotation by alpha in the plane i n
/// under the sandwich R a reverse(R). The axis must already be unit length.
template <typename Scalar>
Rotor<Scalar> rotor_axis_angle(const Eigen::Matrix<Scalar, 3, 1>& axis, Scalar alpha) {
  using std::abs;
  if (!axis.allFinite() || abs(axis.norm() - Scalar(1)) > Scalar(kUnitAxisTolerance)) {
    throw std::invalid_argument("rotor_axis_angle: axis must be a unit vector");
  }
  return exp_bivector((-alpha / Scalar(2)) * hodge_dual(Multivector<Scalar>::vector(axis)));
}

template <typename Scalar>
Multivector<Scalar> sandwich(const Rotor<Scalar>& r, const Multivector<Scalar>& a) {
  return r.multivector() * a * reverse(r.multivector());
}

}  // namespace g3
