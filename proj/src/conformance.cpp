#include "g3tss/conformance.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "g3tss/multivector.hpp"
#include "g3tss/oracle.hpp"
#include "g3tss/rotor.hpp"
#include "g3tss/spinor.hpp"
#include "g3tss/tss.hpp"

namespace g3::conformance {
namespace {

using oracle::ComplexMatrix2d;
using oracle::StateVector2d;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Multivectord multivector(double range) {
    Multivectord::Coeffs c;
    for (int i = 0; i < kNumBlades; ++i) c[i] = uniform(-range, range);
    return Multivectord(c);
  }

  tss::Vector3 vector(double range) {
    return {uniform(-range, range), uniform(-range, range), uniform(-range, range)};
  }

  tss::Vector3 nonzero_vector(double range) {
    tss::Vector3 v;
    do {
      v = vector(range);
    } while (v.norm() < 1e-6);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

double max_abs(const ComplexMatrix2d& m) { return m.cwiseAbs().maxCoeff(); }

SuiteResult isomorphism(Sampler& s, int count) {
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const Multivectord a = s.multivector(10.0);
    const Multivectord b = s.multivector(10.0);
    worst = std::max(worst, max_abs(oracle::rep(a * b) - oracle::rep(a) * oracle::rep(b)));
    worst = std::max(worst, max_abs_diff(oracle::unrep(oracle::rep(a)), a));
  }
  return {"isomorphism", worst, 1e-11};
}

SuiteResult associativity(Sampler& s, int count) {
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const Multivectord a = s.multivector(10.0);
    const Multivectord b = s.multivector(10.0);
    const Multivectord c = s.multivector(10.0);
    const double scale = std::max({1.0, norm(a) * norm(b) * norm(c)});
    worst = std::max(worst, max_abs_diff((a * b) * c, a * (b * c)) / scale);
  }
  return {"associativity", worst, 1e-12};
}

SuiteResult spin_commutators(Sampler& s, int count) {
  double worst = 0.0;
  const Multivectord I = Multivectord::pseudoscalar();
  for (int k = 0; k < count; ++k) {
    const double hbar = s.uniform(0.1, 10.0);
    const auto S = tss::spin_vectors(hbar);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Multivectord expected;
        if (i != j) {
          const int m = 3 - i - j;
          const double levi = ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
          expected = (levi * hbar) * (I * S[m]);
        }
        worst = std::max(worst, max_abs_diff(commutator(S[i], S[j]), expected));
      }
    }
  }
  return {"spin-commutators", worst, 0.0};
}

SuiteResult rabi_triangle(Sampler& s, int count) {
  double worst = 0.0;
  const auto [eps_plus, eps_minus] = basis_eps<double>();
  const StateVector2d up(1.0, 0.0);
  const StateVector2d down(0.0, 1.0);
  for (int k = 0; k < count; ++k) {
    const tss::FieldConfig cfg(s.nonzero_vector(5.0));
    const double t = s.uniform(0.0, 10.0);
    const tss::Hamiltonian H = tss::hamiltonian_from_field(cfg);

    const double closed = tss::rabi_probability(cfg, t);
    const double ga = tss::probability(eps_minus, tss::evolve(eps_plus, tss::evolution_rotor(H, t, cfg.hbar)));
    const ComplexMatrix2d Hm = oracle::hermitian_from_coefficients(H.h0, H.h.x(), H.h.y(), H.h.z());
    const double mat = oracle::probability_matrix(down, oracle::evolve_matrix(up, Hm, t, cfg.hbar));
    worst = std::max({worst, std::abs(closed - ga), std::abs(closed - mat), std::abs(ga - mat)});
  }
  return {"rabi-triangle", worst, 1e-10};
}

SuiteResult exponential(Sampler& s, int count) {
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const tss::Hamiltonian H(0.0, s.vector(5.0));
    const double t = s.uniform(0.0, 10.0);
    const ComplexMatrix2d Hm = oracle::hermitian_from_coefficients(0.0, H.h.x(), H.h.y(), H.h.z());
    const ComplexMatrix2d expected = oracle::mat_exp<double>(std::complex<double>(0.0, -t) * Hm);
    worst = std::max(worst, max_abs(oracle::rep(tss::evolution_rotor(H, t).multivector()) - expected));
  }
  return {"exponential", worst, 1e-9};
}

SuiteResult eigen_relation(Sampler& s, int count) {
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const tss::Hamiltonian H(s.uniform(-10.0, 10.0), s.vector(10.0));
    const tss::EigenSystem es = tss::eigensystem(H);
    const Multivectord Hm = H.multivector();
    const Multivectord& p = es.psi_plus.multivector();
    const Multivectord& m = es.psi_minus.multivector();
    worst = std::max(worst, norm(Hm * p - es.e_plus * p));
    worst = std::max(worst, norm(Hm * m - es.e_minus * m));
    const auto ref = oracle::eigen_hermitian(oracle::hermitian_from_coefficients(H.h0, H.h.x(), H.h.y(), H.h.z()));
    worst = std::max(worst, std::abs(ref.values[0] - es.e_plus) / std::max(1.0, std::abs(es.e_plus)));
    worst = std::max(worst, std::abs(ref.values[1] - es.e_minus) / std::max(1.0, std::abs(es.e_minus)));
  }
  return {"eigen-relation", worst, 1e-11};
}

}  // namespace

std::vector<SuiteResult> run_all(std::uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("conformance: count must be at least 1");
  Sampler sampler(seed);
  std::vector<SuiteResult> results;
  results.push_back(isomorphism(sampler, count));
  results.push_back(associativity(sampler, count));
  results.push_back(spin_commutators(sampler, count));
  results.push_back(rabi_triangle(sampler, count));
  results.push_back(exponential(sampler, count));
  results.push_back(eigen_relation(sampler, count));
  return results;
}

}  // namespace g3::conformance
