#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "g3tss/multivector.hpp"

namespace g3 {

/// Per-pair tolerance of the left-ideal coefficient constraints.
inline constexpr double kIdealTolerance = 1e-12;
inline constexpr double kNormalizedTolerance = 1e-9;

/// re + ps * e123: an element of the center of the algebra, used as a complex
/// amplitude with e123 in the role of the imaginary unit.
template <typename Scalar>
struct CenterScalar {
  Scalar re{0};
  Scalar ps{0};

  CenterScalar() = default;
  CenterScalar(Scalar r, Scalar p = Scalar(0)) : re(r), ps(p) {
    using std::isfinite;
    if (!isfinite(re) || !isfinite(ps)) {
      throw std::invalid_argument("CenterScalar: components must be finite");
    }
  }

  Multivector<Scalar> multivector() const {
    typename Multivector<Scalar>::Coeffs c = Multivector<Scalar>::Coeffs::Zero();
    c[0] = re;
    c[7] = ps;
    return Multivector<Scalar>(c);
  }

  Scalar norm2() const { return re * re + ps * ps; }

  bool operator==(const CenterScalar& o) const { return re == o.re && ps == o.ps; }

  friend CenterScalar operator+(const CenterScalar& a, const CenterScalar& b) {
    return {a.re + b.re, a.ps + b.ps};
  }
  friend CenterScalar operator-(const CenterScalar& a, const CenterScalar& b) {
    return {a.re - b.re, a.ps - b.ps};
  }
  friend CenterScalar operator*(const CenterScalar& a, const CenterScalar& b) {
    return {a.re * b.re - a.ps * b.ps, a.re * b.ps + a.ps * b.re};
  }
};

using CenterScalard = CenterScalar<double>;

/// Reversion flips the pseudoscalar part (complex conjugation).
template <typename Scalar>
CenterScalar<Scalar> reverse(const CenterScalar<Scalar>& c) {
  return {c.re, -c.ps};
}

/// f = (1 + e3) / 2, the primitive idempotent selecting e3 as quantization axis.
template <typename Scalar>
Multivector<Scalar> idempotent_f() {
  return Multivector<Scalar>::vector(Scalar(0), Scalar(0), Scalar(0.5)) +
         Multivector<Scalar>::scalar(Scalar(0.5));
}

template <typename Scalar>
Scalar ideal_violation(const Multivector<Scalar>& m) {
  using std::abs;
  using std::max;
  // Psi = Psi f forces: c(e3) = c(1), c(e12) = c(e123), c(e31) = -c(e1), c(e23) = c(e2).
  return max(max(abs(m[3] - m[0]), abs(m[6] - m[7])), max(abs(m[5] + m[1]), abs(m[4] - m[2])));
}

/// A state in the minimal left ideal G3 f.
template <typename Scalar>
class AlgebraicSpinor {
 public:
  AlgebraicSpinor() = default;

  explicit AlgebraicSpinor(const Multivector<Scalar>& m) : m_(m) {
    if (ideal_violation(m_) > Scalar(kIdealTolerance)) {
      throw std::invalid_argument("AlgebraicSpinor: multivector is not in the left ideal G3 f");
    }
  }

  const Multivector<Scalar>& multivector() const { return m_; }
  Scalar operator[](int i) const { return m_[i]; }

  bool operator==(const AlgebraicSpinor& o) const { return m_ == o.m_; }

  bool is_normalized() const;

  template <typename S>
  friend AlgebraicSpinor<S> left_mul(const Multivector<S>& m, const AlgebraicSpinor<S>& psi);

 private:
  struct Trusted {};
  AlgebraicSpinor(const Multivector<Scalar>& m, Trusted) : m_(m) {}

  Multivector<Scalar> m_;
};

using AlgebraicSpinord = AlgebraicSpinor<double>;

/// (eps_plus, eps_minus) = (f, e1 f).
template <typename Scalar>
std::pair<AlgebraicSpinor<Scalar>, AlgebraicSpinor<Scalar>> basis_eps() {
  const auto f = idempotent_f<Scalar>();
  return {AlgebraicSpinor<Scalar>(f),
          AlgebraicSpinor<Scalar>(Multivector<Scalar>::blade(Blade::kE1) * f)};
}

/// M Psi. The product is re-absorbed into f (M Psi f = M Psi), which makes
/// the ideal constraints hold bit-exactly instead of up to rounding.
template <typename Scalar>
AlgebraicSpinor<Scalar> left_mul(const Multivector<Scalar>& m, const AlgebraicSpinor<Scalar>& psi) {
  const Multivector<Scalar> product = m * psi.m_;
  return AlgebraicSpinor<Scalar>(product * idempotent_f<Scalar>(),
                                 typename AlgebraicSpinor<Scalar>::Trusted{});
}

template <typename Scalar>
AlgebraicSpinor<Scalar> from_amplitudes(const CenterScalar<Scalar>& c_plus,
                                        const CenterScalar<Scalar>& c_minus) {
  const auto [eps_plus, eps_minus] = basis_eps<Scalar>();
  return AlgebraicSpinor<Scalar>(c_plus.multivector() * eps_plus.multivector() +
                                 c_minus.multivector() * eps_minus.multivector());
}

/// Center coefficients (c+, c-) with psi = c+ eps+ + c- eps-.
template <typename Scalar>
std::pair<CenterScalar<Scalar>, CenterScalar<Scalar>> to_amplitudes(const AlgebraicSpinor<Scalar>& psi) {
  return {CenterScalar<Scalar>(Scalar(2) * psi[0], Scalar(2) * psi[7]),
          CenterScalar<Scalar>(Scalar(2) * psi[1], Scalar(2) * psi[2])};
}

template <typename Scalar>
std::pair<CenterScalar<Scalar>, CenterScalar<Scalar>> to_amplitudes(const Multivector<Scalar>& m) {
  return to_amplitudes(AlgebraicSpinor<Scalar>(m));
}

/// <a|b> as 2 (<reverse(a) b>_0 + <reverse(a) b>_3 e123).
template <typename Scalar>
CenterScalar<Scalar> inner(const AlgebraicSpinor<Scalar>& a, const AlgebraicSpinor<Scalar>& b) {
  const Multivector<Scalar> p = reverse(a.multivector()) * b.multivector();
  return {Scalar(2) * p[0], Scalar(2) * p[7]};
}

template <typename Scalar>
AlgebraicSpinor<Scalar> operator*(const CenterScalar<Scalar>& c, const AlgebraicSpinor<Scalar>& psi) {
  return left_mul(c.multivector(), psi);
}

template <typename Scalar>
bool AlgebraicSpinor<Scalar>::is_normalized() const {
  using std::abs;
  const CenterScalar<Scalar> n = inner(*this, *this);
  return abs(n.re - Scalar(1)) <= Scalar(kNormalizedTolerance) &&
         abs(n.ps) <= Scalar(kNormalizedTolerance);
}

}  // namespace g3
