#include "g3tss/tss.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace g3::tss {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDiagonalizationTolerance = 1e-12;

const Vector3 kE2 = Vector3::UnitY();
const Vector3 kE3 = Vector3::UnitZ();

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace

Hamiltonian::Hamiltonian(double scalar, const Vector3& vector) : h0(scalar), h(vector) {
  require_finite(h0, "Hamiltonian h0");
  if (!h.allFinite()) throw std::invalid_argument("Hamiltonian vector part must be finite");
}

Hamiltonian::Hamiltonian(double scalar, double h1, double h2, double h3)
    : Hamiltonian(scalar, Vector3(h1, h2, h3)) {}

Multivectord Hamiltonian::multivector() const {
  return Multivectord::scalar(h0) + Multivectord::vector(h);
}

FieldConfig::FieldConfig(const Vector3& field, double charge, double mass, double reduced_planck)
    : B(field), q(charge), m(mass), hbar(reduced_planck) {
  if (!B.allFinite()) throw std::invalid_argument("FieldConfig: B must be finite");
  require_finite(q, "FieldConfig q");
  require_finite(m, "FieldConfig m");
  require_finite(hbar, "FieldConfig hbar");
  if (!(m > 0.0)) throw std::invalid_argument("FieldConfig: mass must be positive");
  if (!(hbar > 0.0)) throw std::invalid_argument("FieldConfig: hbar must be positive");
}

double FieldConfig::alpha(double t) const { return q * field_magnitude() * t / m; }

double FieldConfig::larmor_frequency() const { return q * field_magnitude() / m; }

double FieldConfig::axial_frequency() const { return q * B.z() / m; }

double FieldConfig::tilt() const { return std::atan2(std::hypot(B.x(), B.y()), B.z()); }

PolarAngles polar_angles(const Hamiltonian& H) {
  const double h1 = H.h.x();
  const double h2 = H.h.y();
  const double h3 = H.h.z();
  const double theta = std::atan2(std::hypot(h1, h2), h3);
  double phi = 0.0;
  if (h1 != 0.0 || h2 != 0.0) {
    phi = std::atan2(h2, h1);
    if (phi == -kPi) phi = kPi;
  }
  return {theta, phi};
}

Rotord diagonalizing_rotor(const Hamiltonian& H) {
  if (H.radius() == 0.0) return Rotord::identity();
  const PolarAngles angles = polar_angles(H);
  return rotor_axis_angle<double>(kE3, angles.phi) * rotor_axis_angle<double>(kE2, angles.theta);
}

Diagonalization diagonalize(const Hamiltonian& H) {
  const Rotord R = diagonalizing_rotor(H);
  const Hamiltonian shortcut(H.h0, Vector3(0.0, 0.0, H.radius()));
  const Multivectord rotated = sandwich(reverse(R), H.multivector());
  const double residual = max_abs_diff(rotated, shortcut.multivector());
  if (residual > kDiagonalizationTolerance * std::max(1.0, H.radius())) {
    throw std::runtime_error("diagonalize: rotated Hamiltonian disagrees with h0 + |r| e3");
  }
  return {shortcut, R, residual};
}

EigenSystem eigensystem(const Hamiltonian& H) {
  const double r = H.radius();
  const auto [eps_plus, eps_minus] = basis_eps<double>();
  if (r == 0.0) {
    return {H.h0, H.h0, Rotord::identity(), eps_plus, eps_minus, true};
  }
  const PolarAngles angles = polar_angles(H);
  const Rotord azimuth = rotor_axis_angle<double>(kE3, angles.phi);
  const Rotord R = azimuth * rotor_axis_angle<double>(kE2, angles.theta);
  const Rotord R_flipped = azimuth * rotor_axis_angle<double>(kE2, angles.theta + kPi);
  return {H.h0 + r,
          H.h0 - r,
          R,
          left_mul(R.multivector(), eps_plus),
          left_mul(R_flipped.multivector(), eps_plus),
          false};
}

Hamiltonian hamiltonian_from_field(const FieldConfig& cfg) {
  return Hamiltonian(0.0, (-cfg.q * cfg.hbar / (2.0 * cfg.m)) * cfg.B);
}

Rotord evolution_rotor(const Hamiltonian& H, double t, double hbar) {
  if (H.h0 != 0.0) {
    throw std::invalid_argument(
        "evolution_rotor: h0 must be zero; split it off as center_phase(h0, t, hbar)");
  }
  require_finite(t, "evolution_rotor t");
  if (!(hbar > 0.0)) throw std::invalid_argument("evolution_rotor: hbar must be positive");
  return exp_bivector((-t / hbar) * hodge_dual(Multivectord::vector(H.h)));
}

CenterScalard center_phase(double h0, double t, double hbar) {
  const double angle = -h0 * t / hbar;
  return {std::cos(angle), std::sin(angle)};
}

AlgebraicSpinord evolve(const AlgebraicSpinord& psi0, const Rotord& U) {
  return left_mul(U.multivector(), psi0);
}

double expectation(const Multivectord& op, const AlgebraicSpinord& psi) {
  const Multivectord& m = psi.multivector();
  return 2.0 * (reverse(m) * op * m)[0];
}

double expectation(const Hamiltonian& op, const AlgebraicSpinord& psi) {
  return expectation(op.multivector(), psi);
}

double probability(const AlgebraicSpinord& u, const AlgebraicSpinord& psi) {
  const Multivectord& um = u.multivector();
  const Multivectord& pm = psi.multivector();
  return 2.0 * (reverse(um) * pm * reverse(pm) * um)[0];
}

double rabi_probability(const FieldConfig& cfg, double t) {
  if (cfg.field_magnitude() == 0.0) return 0.0;
  const double s = std::sin(cfg.tilt());
  return 0.5 * s * s * (1.0 - std::cos(cfg.larmor_frequency() * t));
}

AlgebraicSpinord tilted_state(double theta) {
  return left_mul(rotor_axis_angle<double>(kE2, theta).multivector(), basis_eps<double>().first);
}

std::vector<SpinSample> precession_trajectory(double theta0, const FieldConfig& cfg,
                                              const std::vector<double>& t_grid) {
  if (cfg.B.x() != 0.0 || cfg.B.y() != 0.0) {
    throw std::invalid_argument(
        "precession_trajectory: field must be parallel to e3; use u_vector for general fields");
  }
  const Hamiltonian H = hamiltonian_from_field(cfg);
  const AlgebraicSpinord psi0 = tilted_state(theta0);
  const auto S = spin_vectors(cfg.hbar);
  std::vector<SpinSample> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    const AlgebraicSpinord psi = evolve(psi0, evolution_rotor(H, t, cfg.hbar));
    out.push_back({t, Vector3(expectation(S[0], psi), expectation(S[1], psi), expectation(S[2], psi))});
  }
  return out;
}

Vector3 precession_closed_form(double theta0, const FieldConfig& cfg, double t) {
  const double wt = cfg.axial_frequency() * t;
  const double half = 0.5 * cfg.hbar;
  return {half * std::sin(theta0) * std::cos(wt), -half * std::sin(theta0) * std::sin(wt),
          half * std::cos(theta0)};
}

Vector3 spin_vector(const Rotord& psi_plus_rotor, double hbar) {
  return sandwich(psi_plus_rotor, Multivectord::vector(0.0, 0.0, 0.5 * hbar)).vector_part();
}

Vector3 u_vector(const FieldConfig& cfg, double t) {
  if (cfg.field_magnitude() == 0.0) {
    throw std::invalid_argument("u_vector: field must be nonzero");
  }
  const Rotord U = evolution_rotor(hamiltonian_from_field(cfg), t, cfg.hbar);
  return sandwich(U, Multivectord::vector(kE3)).vector_part();
}

Vector3 u_vector_closed_form(const FieldConfig& cfg, double t) {
  const double b = cfg.field_magnitude();
  if (b == 0.0) {
    throw std::invalid_argument("u_vector_closed_form: field must be nonzero");
  }
  const double theta = cfg.tilt();
  const double a = cfg.alpha(t);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double versine = 1.0 - std::cos(a);
  const double B1 = cfg.B.x();
  const double B2 = cfg.B.y();
  // U = exp(i B^ a/2) turns e3 by -a about B^.
  return {(B1 * c * versine - B2 * std::sin(a)) / b, (B2 * c * versine + B1 * std::sin(a)) / b,
          c * c + s * s * std::cos(a)};
}

std::array<Multivectord, 3> spin_vectors(double hbar) {
  const double half = 0.5 * hbar;
  return {Multivectord::blade(Blade::kE1, half), Multivectord::blade(Blade::kE2, half),
          Multivectord::blade(Blade::kE3, half)};
}

}  // namespace g3::tss
