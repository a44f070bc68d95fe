#pragma once

// Two-state quantum systems expressed in the geometric algebra of 3D space.
//
// A Hermitian 2x2 Hamiltonian h0 + h . sigma is the multivector h0 + h, a state
// is an element of the left ideal G3 f with f = (1 + e3)/2, and unitary
// evolution is a rotor acting from the left.

#include <array>
#include <vector>

#include <Eigen/Core>

#include "g3tss/multivector.hpp"
#include "g3tss/rotor.hpp"
#include "g3tss/spinor.hpp"

namespace g3::tss {

using Vector3 = Eigen::Vector3d;

/// h0 + h1 e1 + h2 e2 + h3 e3 (energy units).
struct Hamiltonian {
  double h0 = 0.0;
  Vector3 h = Vector3::Zero();

  Hamiltonian() = default;
  Hamiltonian(double scalar, const Vector3& vector);
  Hamiltonian(double scalar, double h1, double h2, double h3);

  Multivectord multivector() const;
  double radius() const { return h.norm(); }
};

/// Static magnetic field acting on a charged spin-1/2 particle.
struct FieldConfig {
  Vector3 B = Vector3::Zero();
  double q = 1.0;
  double m = 1.0;
  double hbar = 1.0;

  FieldConfig() = default;
  FieldConfig(const Vector3& field, double charge = 1.0, double mass = 1.0, double reduced_planck = 1.0);

  double field_magnitude() const { return B.norm(); }
  /// Rotation angle q |B| t / m swept by the evolution rotor after time t.
  double alpha(double t) const;
  /// Larmor frequency q |B| / m.
  double larmor_frequency() const;
  /// Signed frequency q B3 / m for a field along e3.
  double axial_frequency() const;
  /// Angle between B and e3.
  double tilt() const;
};

struct PolarAngles {
  double theta;  // [0, pi]
  double phi;    // (-pi, pi]
};

struct Diagonalization {
  Hamiltonian diagonal;  // h0 + |r| e3
  Rotord rotor;
  /// Max coefficient gap between reverse(R) H R and h0 + |r| e3.
  double sandwich_residual;
};

struct EigenSystem {
  double e_plus;
  double e_minus;
  Rotord rotor;
  AlgebraicSpinord psi_plus;
  AlgebraicSpinord psi_minus;
  bool degenerate;
};

struct SpinSample {
  double t;
  Vector3 s;
};

PolarAngles polar_angles(const Hamiltonian& H);

/// R(phi) R(theta) = exp(-i e3 phi/2) exp(-i e2 theta/2); reverse(R) H R is
/// diagonal. Identity when the vector part vanishes.
Rotord diagonalizing_rotor(const Hamiltonian& H);

Diagonalization diagonalize(const Hamiltonian& H);

EigenSystem eigensystem(const Hamiltonian& H);

/// H = -(q hbar / 2m) B.
Hamiltonian hamiltonian_from_field(const FieldConfig& cfg);

/// U = exp(-i H t / hbar). Requires h0 = 0: a scalar part would only add the
/// global center phase exp(-e123 h0 t / hbar), which is not a rotor. Use
/// center_phase() for that factor.
Rotord evolution_rotor(const Hamiltonian& H, double t, double hbar = 1.0);

/// exp(-e123 h0 t / hbar) as a center scalar.
CenterScalard center_phase(double h0, double t, double hbar = 1.0);

AlgebraicSpinord evolve(const AlgebraicSpinord& psi0, const Rotord& U);

/// 2 <reverse(Psi) H Psi>_0.
double expectation(const Multivectord& op, const AlgebraicSpinord& psi);
double expectation(const Hamiltonian& op, const AlgebraicSpinord& psi);

/// 2 <reverse(u) Psi reverse(Psi) u>_0.
double probability(const AlgebraicSpinord& u, const AlgebraicSpinord& psi);

/// 1/2 sin^2(theta) (1 - cos(omega t)); zero when B = 0.
double rabi_probability(const FieldConfig& cfg, double t);

/// Spin expectations along a field parallel to e3, starting from
/// exp(-i e2 theta0/2) eps+.
std::vector<SpinSample> precession_trajectory(double theta0, const FieldConfig& cfg,
                                              const std::vector<double>& t_grid);

/// Closed-form axial precession (hbar/2)(sin th cos wt, -sin th sin wt, cos th).
Vector3 precession_closed_form(double theta0, const FieldConfig& cfg, double t);

/// psi S3 reverse(psi), returned as its vector components.
Vector3 spin_vector(const Rotord& psi_plus_rotor, double hbar = 1.0);

/// u(t) = U e3 reverse(U).
Vector3 u_vector(const FieldConfig& cfg, double t);

/// Component expansion of U e3 reverse(U) in terms of B, theta and alpha.
Vector3 u_vector_closed_form(const FieldConfig& cfg, double t);

/// S_i = (hbar/2) e_i.
std::array<Multivectord, 3> spin_vectors(double hbar = 1.0);

/// exp(-i e2 theta/2) eps+: the spin-up state tilted by theta towards e1.
AlgebraicSpinord tilted_state(double theta);

}  // namespace g3::tss
