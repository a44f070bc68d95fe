#pragma once

// Conventional two-state quantum mechanics over 2x2 complex matrices.
//
// This is the reference side of every differential test: nothing here may use
// the geometric product, reversion, exponentials or rotors. Multivectors and
// spinors are only read coefficient-by-coefficient at the boundary.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "g3tss/multivector.hpp"
#include "g3tss/spinor.hpp"

namespace g3::oracle {

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-10;

template <typename Scalar>
using Complex = std::complex<Scalar>;
template <typename Scalar>
using ComplexMatrix2 = Eigen::Matrix<std::complex<Scalar>, 2, 2>;
/// Column (c+, c-) in the |+>, |-> basis.
template <typename Scalar>
using StateVector2 = Eigen::Matrix<std::complex<Scalar>, 2, 1>;

using ComplexMatrix2d = ComplexMatrix2<double>;
using StateVector2d = StateVector2<double>;

template <typename Scalar>
bool is_hermitian(const ComplexMatrix2<Scalar>& a, Scalar tol = Scalar(kHermitianTolerance)) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

template <typename Scalar>
bool is_unitary(const ComplexMatrix2<Scalar>& a, Scalar tol = Scalar(kUnitaryTolerance)) {
  return (a.adjoint() * a - ComplexMatrix2<Scalar>::Identity()).cwiseAbs().maxCoeff() <= tol;
}

template <typename Scalar>
bool is_normalized(const StateVector2<Scalar>& v, Scalar tol = Scalar(kNormalizedTolerance)) {
  using std::abs;
  return abs(v.squaredNorm() - Scalar(1)) <= tol;
}

/// sigma_0 (identity) through sigma_3.
template <typename Scalar>
ComplexMatrix2<Scalar> pauli(int k) {
  using C = Complex<Scalar>;
  ComplexMatrix2<Scalar> s;
  switch (k) {
    case 0:
      s << C(1), C(0), C(0), C(1);
      break;
    case 1:
      s << C(0), C(1), C(1), C(0);
      break;
    case 2:
      s << C(0), C(0, -1), C(0, 1), C(0);
      break;
    case 3:
      s << C(1), C(0), C(0), C(-1);
      break;
    default:
      throw std::invalid_argument("pauli: index must lie in 0..3, got " + std::to_string(k));
  }
  return s;
}

/// Matrix image of each basis blade, built as products of Pauli matrices
/// rather than entered by hand.
template <typename Scalar>
std::array<ComplexMatrix2<Scalar>, kNumBlades> blade_images() {
  const auto s1 = pauli<Scalar>(1);
  const auto s2 = pauli<Scalar>(2);
  const auto s3 = pauli<Scalar>(3);
  return {pauli<Scalar>(0), s1, s2, s3, s2 * s3, s3 * s1, s1 * s2, s1 * s2 * s3};
}

/// Algebra isomorphism Cl(3,0) -> Mat(2, C), e_k -> sigma_k.
template <typename Scalar>
ComplexMatrix2<Scalar> rep(const Multivector<Scalar>& a) {
  static const auto images = blade_images<Scalar>();
  ComplexMatrix2<Scalar> m = ComplexMatrix2<Scalar>::Zero();
  for (int i = 0; i < kNumBlades; ++i) {
    m += a[i] * images[i];
  }
  return m;
}

/// Inverse of rep: project onto the trace-orthogonal Pauli basis, then split
/// each complex coefficient into its real (grade 0/1) and imaginary (grade 3/2)
/// parts.
template <typename Scalar>
Multivector<Scalar> unrep(const ComplexMatrix2<Scalar>& m) {
  std::array<Complex<Scalar>, 4> z;
  for (int k = 0; k < 4; ++k) {
    z[k] = (pauli<Scalar>(k) * m).trace() / Scalar(2);
  }
  typename Multivector<Scalar>::Coeffs c;
  c << z[0].real(), z[1].real(), z[2].real(), z[3].real(), z[1].imag(), z[2].imag(), z[3].imag(),
      z[0].imag();
  return Multivector<Scalar>(c);
}

/// Column vector of a left-ideal element: the first column of its matrix
/// image (the second column vanishes on G3 f).
template <typename Scalar>
StateVector2<Scalar> spinor_rep(const AlgebraicSpinor<Scalar>& psi) {
  return rep(psi.multivector()).col(0);
}

template <typename Scalar>
struct HermitianEigen {
  std::array<Scalar, 2> values;  // descending
  std::array<StateVector2<Scalar>, 2> vectors;
};

namespace detail {

template <typename Scalar>
StateVector2<Scalar> fix_phase(StateVector2<Scalar> v) {
  using std::abs;
  v /= v.norm();
  const int lead = abs(v[0]) > Scalar(0) ? 0 : 1;
  v *= std::conj(v[lead]) / abs(v[lead]);
  v[lead] = Complex<Scalar>(v[lead].real(), Scalar(0));
  return v;
}

}  // namespace detail

/// Closed-form eigendecomposition of a 2x2 Hermitian matrix. Eigenvalues are
/// the roots h0 +- |r| of the characteristic quadratic, where h0 = tr/2 and
/// |r|^2 = (tr/2)^2 - det is evaluated in the cancellation-free form
/// ((a - d)/2)^2 + |b|^2. Eigenvectors have their first nonzero component real
/// and positive.
template <typename Scalar>
HermitianEigen<Scalar> eigen_hermitian(const ComplexMatrix2<Scalar>& h) {
  using std::abs;
  using std::sqrt;
  const Scalar scale = std::max(Scalar(1), h.cwiseAbs().maxCoeff());
  if (!is_hermitian(h, Scalar(kHermitianTolerance) * scale)) {
    throw std::invalid_argument("eigen_hermitian: matrix is not Hermitian");
  }
  const Scalar a = h(0, 0).real();
  const Scalar d = h(1, 1).real();
  const Complex<Scalar> b = h(0, 1);
  const Scalar mean = (a + d) / Scalar(2);
  const Scalar half_gap = (a - d) / Scalar(2);
  const Scalar radius = sqrt(half_gap * half_gap + std::norm(b));

  HermitianEigen<Scalar> out;
  out.values = {mean + radius, mean - radius};
  if (radius == Scalar(0)) {
    out.vectors = {StateVector2<Scalar>(Complex<Scalar>(1), Complex<Scalar>(0)),
                   StateVector2<Scalar>(Complex<Scalar>(0), Complex<Scalar>(1))};
    return out;
  }
  for (int k = 0; k < 2; ++k) {
    const Scalar lambda = out.values[k];
    // Rows of (H - lambda I) are parallel; either null vector candidate works,
    // pick the better-conditioned one.
    const StateVector2<Scalar> from_row0(b, Complex<Scalar>(lambda - a));
    const StateVector2<Scalar> from_row1(Complex<Scalar>(lambda - d), std::conj(b));
    out.vectors[k] = detail::fix_phase<Scalar>(from_row0.norm() >= from_row1.norm() ? from_row0 : from_row1);
  }
  return out;
}

/// exp(A) by scaling and squaring around a degree-18 Taylor polynomial. Kept
/// independent of any closed-form 2x2 exponential.
template <typename Scalar>
ComplexMatrix2<Scalar> mat_exp(const ComplexMatrix2<Scalar>& a) {
  using std::ceil;
  using std::log2;
  constexpr int kOrder = 18;
  const Scalar norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > Scalar(0.5)) {
    squarings = static_cast<int>(ceil(log2(norm1 / Scalar(0.5))));
  }
  const ComplexMatrix2<Scalar> scaled = a / std::ldexp(Scalar(1), squarings);

  ComplexMatrix2<Scalar> term = ComplexMatrix2<Scalar>::Identity();
  ComplexMatrix2<Scalar> sum = ComplexMatrix2<Scalar>::Identity();
  for (int k = 1; k <= kOrder; ++k) {
    term = (term * scaled) / Scalar(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) {
    sum = (sum * sum).eval();
  }
  return sum;
}

/// exp(-i H t / hbar) |psi>.
template <typename Scalar>
StateVector2<Scalar> evolve_matrix(const StateVector2<Scalar>& psi, const ComplexMatrix2<Scalar>& h,
                                   Scalar t, Scalar hbar) {
  if (!(hbar > Scalar(0))) {
    throw std::invalid_argument("evolve_matrix: hbar must be positive");
  }
  const Complex<Scalar> factor(Scalar(0), -t / hbar);
  return mat_exp<Scalar>(factor * h) * psi;
}

/// <psi|H|psi>.
template <typename Scalar>
Scalar expectation_matrix(const ComplexMatrix2<Scalar>& h, const StateVector2<Scalar>& psi) {
  using std::abs;
  const Scalar scale = std::max(Scalar(1), h.cwiseAbs().maxCoeff());
  if (!is_hermitian(h, Scalar(kHermitianTolerance) * scale)) {
    throw std::invalid_argument("expectation_matrix: operator is not Hermitian");
  }
  const Complex<Scalar> value = psi.dot(h * psi);  // dot() conjugates the left operand
  if (abs(value.imag()) > Scalar(1e-13) * scale * std::max(Scalar(1), psi.squaredNorm())) {
    throw std::logic_error("expectation_matrix: non-real expectation value");
  }
  return value.real();
}

/// |<u|psi>|^2.
template <typename Scalar>
Scalar probability_matrix(const StateVector2<Scalar>& u, const StateVector2<Scalar>& psi) {
  return std::norm(u.dot(psi));
}

/// The Hermitian operator h0 sigma_0 + h . sigma.
template <typename Scalar>
ComplexMatrix2<Scalar> hermitian_from_coefficients(Scalar h0, Scalar h1, Scalar h2, Scalar h3) {
  return h0 * pauli<Scalar>(0) + h1 * pauli<Scalar>(1) + h2 * pauli<Scalar>(2) + h3 * pauli<Scalar>(3);
}

}  // namespace g3::oracle
