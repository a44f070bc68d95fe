#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace g3 {

// Blade order is part of the serialization contract. e31 (not e13) is the
// canonical fifth blade.
enum class Blade : int {
  kScalar = 0,
  kE1 = 1,
  kE2 = 2,
  kE3 = 3,
  kE23 = 4,
  kE31 = 5,
  kE12 = 6,
  kE123 = 7,
};

inline constexpr int kNumBlades = 8;

inline constexpr std::array<int, kNumBlades> kBladeGrade = {0, 1, 1, 1, 2, 2, 2, 3};

inline constexpr std::array<const char*, kNumBlades> kBladeName = {
    "1", "e1", "e2", "e3", "e23", "e31", "e12", "e123"};

namespace detail {

// Generator bitmask of each blade (bit 0 = e1, bit 1 = e2, bit 2 = e3) and the
// sign relating our basis element to the ascending product of its generators.
// Only e31 = -e1e3 carries a minus sign.
inline constexpr std::array<std::uint8_t, kNumBlades> kBladeMask = {
    0b000, 0b001, 0b010, 0b100, 0b110, 0b101, 0b011, 0b111};
inline constexpr std::array<int, kNumBlades> kBladeOrientation = {1, 1, 1, 1, 1, -1, 1, 1};

struct ProductEntry {
  int index;
  int sign;
};

using ProductTable = std::array<std::array<ProductEntry, kNumBlades>, kNumBlades>;

// Sign picked up when moving the generators of `b` leftward past those of
// `a` into ascending order (each transposition of distinct generators flips
// sign; e_i e_i = +1 contributes nothing).
constexpr int reorder_sign(std::uint8_t a, std::uint8_t b) {
  int swaps = 0;
  for (int bit = 0; bit < 3; ++bit) {
    if (b & (1u << bit)) {
      for (int higher = bit + 1; higher < 3; ++higher) {
        if (a & (1u << higher)) ++swaps;
      }
    }
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

constexpr int index_of_mask(std::uint8_t mask) {
  for (int i = 0; i < kNumBlades; ++i) {
    if (kBladeMask[i] == mask) return i;
  }
  return -1;
}

constexpr ProductTable build_product_table() {
  ProductTable table{};
  for (int i = 0; i < kNumBlades; ++i) {
    for (int j = 0; j < kNumBlades; ++j) {
      const std::uint8_t ma = kBladeMask[i];
      const std::uint8_t mb = kBladeMask[j];
      const int target = index_of_mask(static_cast<std::uint8_t>(ma ^ mb));
      const int sign = kBladeOrientation[i] * kBladeOrientation[j] * reorder_sign(ma, mb) *
                       kBladeOrientation[target];
      table[i][j] = {target, sign};
    }
  }
  return table;
}

}  // namespace detail

/// (target blade, sign) for the product of basis blades i and j, derived at
/// compile time from e_i^2 = 1 and e_i e_j = -e_j e_i.
inline constexpr detail::ProductTable kProductTable = detail::build_product_table();

/// A general element of Cl(3,0): eight real coefficients over
/// [1, e1, e2, e3, e23, e31, e12, e123]. Coefficients are always finite.
template <typename Scalar>
class Multivector {
 public:
  using Coeffs = Eigen::Matrix<Scalar, kNumBlades, 1>;

  Multivector() : c_(Coeffs::Zero()) {}

  explicit Multivector(const Coeffs& c) : c_(c) {
    if (!c_.allFinite()) {
      throw std::invalid_argument("Multivector: coefficients must be finite");
    }
  }

  static Multivector zero() { return Multivector(); }

  static Multivector scalar(Scalar s) { return blade(Blade::kScalar, s); }

  static Multivector blade(Blade b, Scalar value = Scalar(1)) {
    Coeffs c = Coeffs::Zero();
    c[static_cast<int>(b)] = value;
    return Multivector(c);
  }

  static Multivector vector(Scalar x, Scalar y, Scalar z) {
    Coeffs c = Coeffs::Zero();
    c[1] = x;
    c[2] = y;
    c[3] = z;
    return Multivector(c);
  }

  static Multivector vector(const Eigen::Matrix<Scalar, 3, 1>& v) {
    return vector(v.x(), v.y(), v.z());
  }

  /// The unit pseudoscalar e123.
  static Multivector pseudoscalar(Scalar value = Scalar(1)) { return blade(Blade::kE123, value); }

  Scalar operator[](int i) const { return c_[i]; }
  Scalar operator[](Blade b) const { return c_[static_cast<int>(b)]; }

  const Coeffs& coeffs() const { return c_; }

  /// Grade-1 coefficients as a 3-vector.
  Eigen::Matrix<Scalar, 3, 1> vector_part() const { return c_.template segment<3>(1); }

  bool operator==(const Multivector& other) const { return c_ == other.c_; }
  bool operator!=(const Multivector& other) const { return !(*this == other); }

  Multivector operator-() const { return Multivector(Coeffs(-c_)); }

  friend Multivector operator+(const Multivector& a, const Multivector& b) {
    return Multivector(Coeffs(a.c_ + b.c_));
  }
  friend Multivector operator-(const Multivector& a, const Multivector& b) {
    return Multivector(Coeffs(a.c_ - b.c_));
  }
  friend Multivector operator*(Scalar s, const Multivector& a) { return Multivector(Coeffs(s * a.c_)); }
  friend Multivector operator*(const Multivector& a, Scalar s) { return Multivector(Coeffs(s * a.c_)); }

  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    Coeffs r = Coeffs::Zero();
    for (int i = 0; i < kNumBlades; ++i) {
      if (a.c_[i] == Scalar(0)) continue;
      for (int j = 0; j < kNumBlades; ++j) {
        const auto& e = kProductTable[i][j];
        r[e.index] += Scalar(e.sign) * a.c_[i] * b.c_[j];
      }
    }
    return Multivector(r);
  }

 private:
  Coeffs c_;
};

using Multivectord = Multivector<double>;

template <typename Scalar>
Multivector<Scalar> gp(const Multivector<Scalar>& a, const Multivector<Scalar>& b) {
  return a * b;
}

template <typename Scalar>
Multivector<Scalar> add(const Multivector<Scalar>& a, const Multivector<Scalar>& b) {
  return a + b;
}

template <typename Scalar>
Multivector<Scalar> scale(Scalar s, const Multivector<Scalar>& a) {
  return s * a;
}

/// Projection onto grade k (0..3).
template <typename Scalar>
Multivector<Scalar> grade(const Multivector<Scalar>& a, int k) {
  if (k < 0 || k > 3) {
    throw std::invalid_argument("grade: k must lie in 0..3, got " + std::to_string(k));
  }
  typename Multivector<Scalar>::Coeffs c = Multivector<Scalar>::Coeffs::Zero();
  for (int i = 0; i < kNumBlades; ++i) {
    if (kBladeGrade[i] == k) c[i] = a[i];
  }
  return Multivector<Scalar>(c);
}

/// Reversion: negates grades 2 and 3.
template <typename Scalar>
Multivector<Scalar> reverse(const Multivector<Scalar>& a) {
  typename Multivector<Scalar>::Coeffs c = a.coeffs();
  c.template tail<4>() = -c.template tail<4>();
  return Multivector<Scalar>(c);
}

/// Left multiplication by the pseudoscalar e123 (central, so side is irrelevant).
template <typename Scalar>
Multivector<Scalar> hodge_dual(const Multivector<Scalar>& a) {
  return Multivector<Scalar>::pseudoscalar() * a;
}

/// Euclidean coefficient norm.
template <typename Scalar>
Scalar norm(const Multivector<Scalar>& a) {
  return a.coeffs().norm();
}

template <typename Scalar>
Multivector<Scalar> commutator(const Multivector<Scalar>& a, const Multivector<Scalar>& b) {
  return a * b - b * a;
}

/// Outer product of two vectors, taken as the antisymmetric half of the
/// geometric product.
template <typename Scalar>
Multivector<Scalar> wedge(const Multivector<Scalar>& x, const Multivector<Scalar>& y) {
  return Scalar(0.5) * commutator(x, y);
}

template <typename Scalar>
bool is_even(const Multivector<Scalar>& a) {
  return a[1] == Scalar(0) && a[2] == Scalar(0) && a[3] == Scalar(0) && a[7] == Scalar(0);
}

template <typename Scalar>
bool is_bivector(const Multivector<Scalar>& a) {
  return a[0] == Scalar(0) && is_even(a);
}

template <typename Scalar>
Scalar max_abs_diff(const Multivector<Scalar>& a, const Multivector<Scalar>& b) {
  return (a.coeffs() - b.coeffs()).cwiseAbs().maxCoeff();
}

}  // namespace g3
