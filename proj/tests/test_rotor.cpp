#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Geometry>

#include "g3tss/rotor.hpp"
#include "test_support.hpp"

using namespace g3;
using g3::testing::kPi;
using g3::testing::Random;

namespace {

const Multivectord kE1 = Multivectord::blade(Blade::kE1);
const Multivectord kE2 = Multivectord::blade(Blade::kE2);
const Multivectord kE3 = Multivectord::blade(Blade::kE3);

Multivectord even(double s, double b23, double b31, double b12) {
  Multivectord::Coeffs c = Multivectord::Coeffs::Zero();
  c[0] = s;
  c[4] = b23;
  c[5] = b31;
  c[6] = b12;
  return Multivectord(c);
}

}  // namespace

TEST_CASE("exp_bivector closed-form values") {
  // -i e3 pi/2 = -e12 pi/2 -> cos(pi/2) - e12 sin(pi/2).
  const Rotord r = exp_bivector((-kPi / 2) * hodge_dual(kE3));
  CHECK(max_abs_diff(r.multivector(), even(0, 0, 0, -1)) <= 1e-15);

  CHECK(exp_bivector(Multivectord::zero()).multivector() == Multivectord::scalar(1.0));

  // n = (e1+e2+e3)/sqrt3, alpha = 2pi/3: cos(pi/3) - i n sin(pi/3) = 1/2 - (e23+e31+e12)/2.
  const Multivectord n = (1.0 / std::sqrt(3.0)) * (kE1 + kE2 + kE3);
  const Rotord q = exp_bivector((-kPi / 3) * hodge_dual(n));
  CHECK(max_abs_diff(q.multivector(), even(0.5, -0.5, -0.5, -0.5)) <= 1e-15);
}

TEST_CASE("exp_bivector small-angle series agrees with the trigonometric branch") {
  for (double mag : {1e-9, 5e-9, 9.99e-9}) {
    const Multivectord B = even(0, 0.6 * mag, -0.8 * mag, 0);
    const Rotord r = exp_bivector(B);
    CHECK(std::abs(r[0] - std::cos(mag)) <= 1e-16);
    CHECK(std::abs(r[4] - 0.6 * std::sin(mag)) <= 1e-22);
    CHECK(std::abs(r[5] + 0.8 * std::sin(mag)) <= 1e-22);
  }
}

TEST_CASE("exp_bivector rejects anything but a pure bivector") {
  CHECK_THROWS_AS(exp_bivector(kE1), std::invalid_argument);
  CHECK_THROWS_AS(exp_bivector(Multivectord::scalar(0.1)), std::invalid_argument);
  CHECK_THROWS_AS(exp_bivector(Multivectord::pseudoscalar(0.1)), std::invalid_argument);
}

TEST_CASE("rotor_axis_angle") {
  CHECK(rotor_axis_angle<double>(Eigen::Vector3d::UnitZ(), 0.0).multivector() == Multivectord::scalar(1.0));

  // exp(-i e2 pi/8) = cos(pi/8) - e31 sin(pi/8), since i e2 = e31.
  const Rotord r = rotor_axis_angle<double>(Eigen::Vector3d::UnitY(), kPi / 4);
  CHECK(max_abs_diff(r.multivector(), even(std::cos(kPi / 8), 0, -std::sin(kPi / 8), 0)) <= 1e-15);

  Random rng(11);
  for (int k = 0; k < 50; ++k) {
    const Rotord full = rotor_axis_angle<double>(rng.unit_vector(), 2 * kPi);
    CHECK(max_abs_diff(full.multivector(), Multivectord::scalar(-1.0)) <= 1e-15);
  }

  CHECK_THROWS_AS(rotor_axis_angle<double>(Eigen::Vector3d(1.0, 1.0, 0.0), 0.3), std::invalid_argument);
  CHECK_THROWS_AS(rotor_axis_angle<double>(Eigen::Vector3d::Zero(), 0.3), std::invalid_argument);
}

TEST_CASE("sandwich rotates counterclockwise in the plane i n") {
  const Rotord quarter = rotor_axis_angle<double>(Eigen::Vector3d::UnitZ(), kPi / 2);
  CHECK(max_abs_diff(sandwich(quarter, kE1), kE2) <= 1e-15);

  Random rng(12);
  for (int k = 0; k < 100; ++k) {
    const auto a = rng.multivector();
    CHECK(sandwich(Rotord::identity(), a) == a);
  }

  // Right-hand rule about an arbitrary axis, checked against Rodrigues' formula.
  for (int k = 0; k < 200; ++k) {
    const Eigen::Vector3d n = rng.unit_vector();
    const double alpha = rng.uniform(-kPi, kPi);
    const Eigen::Vector3d v = rng.vector(3.0);
    const Eigen::Vector3d expected =
        v * std::cos(alpha) + n.cross(v) * std::sin(alpha) + n * n.dot(v) * (1 - std::cos(alpha));
    const Multivectord rotated = sandwich(rotor_axis_angle<double>(n, alpha), Multivectord::vector(v));
    CHECK((rotated.vector_part() - expected).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(max_abs_diff(grade(rotated, 1), rotated) <= 1e-12);
  }
}

TEST_CASE("rotor group closure") {
  Random rng(13);
  for (int k = 0; k < 1000; ++k) {
    const Rotord a = rng.rotor();
    const Rotord b = rng.rotor();
    const Multivectord ab = a.multivector() * b.multivector();
    CHECK(is_even(ab));
    CHECK(std::abs(norm(ab) - 1.0) <= 1e-12);

    const Multivectord v = Multivectord::vector(rng.vector(5.0));
    const Multivectord rv = sandwich(a, v);
    CHECK(max_abs_diff(grade(rv, 1), rv) <= 1e-12);
    CHECK(std::abs(norm(rv) - norm(v)) <= 1e-12 * std::max(1.0, norm(v)));
  }
}

TEST_CASE("Rotor construction checks its invariants") {
  CHECK_THROWS_AS(Rotord{kE1}, std::invalid_argument);
  CHECK_THROWS_AS(Rotord(Multivectord::scalar(1.1)), std::invalid_argument);
  CHECK_THROWS_AS(Rotord(even(1.0, 0.0, 0.0, 1e-4)), std::invalid_argument);
  CHECK_NOTHROW(Rotord(Multivectord::scalar(1.0 + 4e-10)));
  CHECK(reverse(Rotord(even(0.6, 0.8, 0, 0))).multivector() == even(0.6, -0.8, 0, 0));
}
