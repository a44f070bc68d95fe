#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "g3tss/spinor.hpp"
#include "g3tss/tss.hpp"

namespace g3::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitTolerance = 2;

enum class OutputFormat { kCsv, kJson };

/// `steps` evenly spaced points from t_start to t_end inclusive; a single
/// step is the point t_start.
struct TimeGrid {
  double t_start = 0.0;
  double t_end = 10.0;
  int steps = 101;

  std::vector<double> points() const;
};

struct RunConfig {
  std::optional<tss::Hamiltonian> hamiltonian;
  std::optional<tss::Vector3> field;
  double q = 1.0;
  double m = 1.0;
  double hbar = 1.0;
  TimeGrid grid;
  std::optional<double> theta0;
  std::optional<AlgebraicSpinord> initial;
  OutputFormat format = OutputFormat::kCsv;
  bool check = false;
  bool check_rabi = false;
  std::uint64_t seed = 42;
  int count = 1000;
  double tol = 1e-10;

  /// Throws std::invalid_argument when both or neither of the Hamiltonian and
  /// field specs are present, or the grid is malformed.
  void validate() const;
  tss::FieldConfig field_config() const;
};

/// Applies the keys of a JSON configuration object onto `cfg`. Recognised keys:
/// h, B, q, m, hbar, theta0, initial, t_start, t_end, steps, format, check,
/// check_rabi, seed, count, tol.
void apply_json(const nlohmann::json& j, RunConfig& cfg);

int cmd_diag(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_conformance(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line: `<prog> diag|evolve|conformance [flags]`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace g3::cli
