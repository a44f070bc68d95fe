#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace g3::conformance {

struct SuiteResult {
  std::string name;
  double worst_residual;
  double tolerance;
  bool passed() const { return worst_residual <= tolerance; }
};

/// Runs the randomized invariant suites (isomorphism, associativity, spin
/// commutators, Rabi triangle, exponential cross-check, eigen-relation) with
/// `count` samples each, drawn from a generator seeded with `seed`.
std::vector<SuiteResult> run_all(std::uint64_t seed, int count);

}  // namespace g3::conformance
