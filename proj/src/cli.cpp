#include "g3tss/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "g3tss/conformance.hpp"
#include "g3tss/io.hpp"
#include "g3tss/oracle.hpp"
#include "g3tss/rotor.hpp"

namespace g3::cli {
namespace {

using io::format_double;
using nlohmann::json;
using oracle::ComplexMatrix2d;
using oracle::StateVector2d;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  ss.imbue(std::locale::classic());
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    is.imbue(std::locale::classic());
    double v = 0.0;
    if (!(is >> v) || !(is >> std::ws).eof() || !std::isfinite(v)) {
      throw UsageError(std::string(flag) + ": cannot parse '" + item + "' as a finite number");
    }
    values.push_back(v);
  }
  if (values.size() != expected) {
    throw UsageError(std::string(flag) + ": expected " + std::to_string(expected) +
                     " comma-separated numbers");
  }
  return values;
}

double json_number(const json& j, const char* key) {
  if (!j.is_number()) throw UsageError(std::string("config: '") + key + "' must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw UsageError(std::string("config: '") + key + "' must be finite");
  return v;
}

std::vector<double> json_numbers(const json& j, std::size_t expected, const char* key) {
  if (!j.is_array() || j.size() != expected) {
    throw UsageError(std::string("config: '") + key + "' must be an array of " +
                     std::to_string(expected) + " numbers");
  }
  std::vector<double> out;
  for (const auto& v : j) out.push_back(json_number(v, key));
  return out;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  throw UsageError("format must be csv or json, got '" + s + "'");
}

AlgebraicSpinord parse_initial(const json& j) {
  if (j.is_string()) {
    const auto [plus, minus] = basis_eps<double>();
    if (j == "plus") return plus;
    if (j == "minus") return minus;
    throw UsageError("initial state must be \"plus\", \"minus\" or an amplitude object");
  }
  try {
    return io::spinor_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("initial state: ") + e.what());
  }
}

/// Ordered named columns, emitted as CSV or as a JSON object of arrays.
class Table {
 public:
  explicit Table(std::vector<std::string> names) : names_(std::move(names)), columns_(names_.size()) {}

  void add_row(const std::vector<double>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) columns_[i].push_back(row[i]);
  }

  void write(std::ostream& out, OutputFormat format) const {
    if (format == OutputFormat::kCsv) {
      for (std::size_t i = 0; i < names_.size(); ++i) out << (i ? "," : "") << names_[i];
      out << '\n';
      const std::size_t rows = columns_.empty() ? 0 : columns_[0].size();
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < names_.size(); ++i) out << (i ? "," : "") << format_double(columns_[i][r]);
        out << '\n';
      }
      return;
    }
    // Serialized by hand so numbers keep 17 significant digits and key order
    // follows the column order.
    out << "{\n";
    for (std::size_t i = 0; i < names_.size(); ++i) {
      out << "  \"" << names_[i] << "\": [";
      for (std::size_t r = 0; r < columns_[i].size(); ++r) out << (r ? ", " : "") << format_double(columns_[i][r]);
      out << "]" << (i + 1 < names_.size() ? "," : "") << "\n";
    }
    out << "}\n";
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<double>> columns_;
};

/// Key/value report for `diag`.
class Report {
 public:
  void add(const std::string& key, const std::string& csv_value, nlohmann::ordered_json json_value) {
    entries_.emplace_back(key, csv_value);
    json_[key] = std::move(json_value);
  }

  void write(std::ostream& out, OutputFormat format) const {
    if (format == OutputFormat::kJson) {
      out << json_.dump(2) << '\n';
      return;
    }
    out << "quantity,value\n";
    for (const auto& [k, v] : entries_) out << k << ',' << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  nlohmann::ordered_json json_ = nlohmann::ordered_json::object();
};

std::string join(const std::vector<double>& values) {
  std::string s = "\"";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + format_double(values[i]);
  return s + "\"";
}

std::vector<double> coefficients(const Multivectord& m) {
  return {m.coeffs().data(), m.coeffs().data() + kNumBlades};
}

std::vector<double> amplitudes(const AlgebraicSpinord& psi) {
  const auto [cp, cm] = to_amplitudes(psi);
  return {cp.re, cp.ps, cm.re, cm.ps};
}

ComplexMatrix2d matrix_of(const tss::Hamiltonian& H) {
  return oracle::hermitian_from_coefficients(H.h0, H.h.x(), H.h.y(), H.h.z());
}

}  // namespace

std::vector<double> TimeGrid::points() const {
  std::vector<double> t(static_cast<std::size_t>(steps));
  if (steps == 1) {
    t[0] = t_start;
    return t;
  }
  const double dt = (t_end - t_start) / static_cast<double>(steps - 1);
  for (int k = 0; k < steps; ++k) t[static_cast<std::size_t>(k)] = t_start + dt * k;
  t.back() = t_end;
  return t;
}

void RunConfig::validate() const {
  if (hamiltonian.has_value() == field.has_value()) {
    throw UsageError("exactly one of a Hamiltonian (--h) or a field (--B) must be given");
  }
  if (grid.steps < 1) throw UsageError("--steps must be a positive integer");
  if (!(grid.t_end >= grid.t_start)) throw UsageError("--t-end must not precede --t-start");
}

tss::FieldConfig RunConfig::field_config() const {
  if (!field) throw UsageError("a field spec (--B) is required");
  try {
    return tss::FieldConfig(*field, q, m, hbar);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void apply_json(const json& j, RunConfig& cfg) {
  if (!j.is_object()) throw UsageError("config: top level must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "h") {
      const auto h = json_numbers(value, 4, "h");
      cfg.hamiltonian = tss::Hamiltonian(h[0], h[1], h[2], h[3]);
    } else if (key == "B") {
      const auto b = json_numbers(value, 3, "B");
      cfg.field = tss::Vector3(b[0], b[1], b[2]);
    } else if (key == "q") {
      cfg.q = json_number(value, "q");
    } else if (key == "m") {
      cfg.m = json_number(value, "m");
    } else if (key == "hbar") {
      cfg.hbar = json_number(value, "hbar");
    } else if (key == "theta0") {
      cfg.theta0 = json_number(value, "theta0");
    } else if (key == "initial") {
      cfg.initial = parse_initial(value);
    } else if (key == "t_start") {
      cfg.grid.t_start = json_number(value, "t_start");
    } else if (key == "t_end") {
      cfg.grid.t_end = json_number(value, "t_end");
    } else if (key == "steps") {
      if (!value.is_number_integer()) throw UsageError("config: 'steps' must be an integer");
      cfg.grid.steps = value.get<int>();
    } else if (key == "format") {
      if (!value.is_string()) throw UsageError("config: 'format' must be a string");
      cfg.format = parse_format(value.get<std::string>());
    } else if (key == "check") {
      if (!value.is_boolean()) throw UsageError("config: 'check' must be a boolean");
      cfg.check = value.get<bool>();
    } else if (key == "check_rabi") {
      if (!value.is_boolean()) throw UsageError("config: 'check_rabi' must be a boolean");
      cfg.check_rabi = value.get<bool>();
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw UsageError("config: 'seed' must be a non-negative integer");
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "count") {
      if (!value.is_number_integer()) throw UsageError("config: 'count' must be an integer");
      cfg.count = value.get<int>();
    } else if (key == "tol") {
      cfg.tol = json_number(value, "tol");
    } else {
      throw UsageError("config: unknown key '" + key + "'");
    }
  }
}

int cmd_diag(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  if (!cfg.hamiltonian) throw UsageError("diag requires a Hamiltonian (--h h0,h1,h2,h3)");
  const tss::Hamiltonian& H = *cfg.hamiltonian;
  const tss::PolarAngles angles = tss::polar_angles(H);
  const tss::Diagonalization diag = tss::diagonalize(H);
  const tss::EigenSystem es = tss::eigensystem(H);

  const Multivectord Hm = H.multivector();
  const double eigen_residual =
      std::max(norm(Hm * es.psi_plus.multivector() - es.e_plus * es.psi_plus.multivector()),
               norm(Hm * es.psi_minus.multivector() - es.e_minus * es.psi_minus.multivector()));

  const auto ref = oracle::eigen_hermitian(matrix_of(H));
  const double value_residual =
      std::max(std::abs(ref.values[0] - es.e_plus), std::abs(ref.values[1] - es.e_minus));
  double vector_residual = 0.0;
  if (!es.degenerate) {
    vector_residual =
        std::max(std::abs(1.0 - std::abs(ref.vectors[0].dot(oracle::spinor_rep(es.psi_plus)))),
                 std::abs(1.0 - std::abs(ref.vectors[1].dot(oracle::spinor_rep(es.psi_minus)))));
  }

  const std::vector<double> values = {es.e_plus, es.e_minus};
  const std::vector<double> rotor = coefficients(es.rotor.multivector());
  const std::vector<double> psi_plus = amplitudes(es.psi_plus);
  const std::vector<double> psi_minus = amplitudes(es.psi_minus);

  Report report;
  report.add("e_plus", format_double(es.e_plus), es.e_plus);
  report.add("e_minus", format_double(es.e_minus), es.e_minus);
  report.add("degenerate", es.degenerate ? "true" : "false", es.degenerate);
  report.add("theta", format_double(angles.theta), angles.theta);
  report.add("phi", format_double(angles.phi), angles.phi);
  report.add("rotor", join(rotor), rotor);
  report.add("rotor_text", "\"" + io::to_text(es.rotor.multivector()) + "\"",
             io::to_text(es.rotor.multivector()));
  report.add("diagonal_h3", format_double(diag.diagonal.h.z()), diag.diagonal.h.z());
  report.add("psi_plus", join(psi_plus), nlohmann::ordered_json(io::to_json(es.psi_plus)));
  report.add("psi_minus", join(psi_minus), nlohmann::ordered_json(io::to_json(es.psi_minus)));
  report.add("residual_eigen", format_double(eigen_residual), eigen_residual);
  report.add("residual_diagonalization", format_double(diag.sandwich_residual), diag.sandwich_residual);
  report.add("residual_oracle_values", format_double(value_residual), value_residual);
  report.add("residual_oracle_vectors", format_double(vector_residual), vector_residual);
  report.write(out, cfg.format);

  const double scale = std::max(1.0, std::abs(es.e_plus) + std::abs(es.e_minus));
  const bool ok = eigen_residual <= cfg.tol * scale && value_residual <= cfg.tol * scale &&
                  vector_residual <= cfg.tol;
  return ok ? kExitOk : kExitTolerance;
}

int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  const tss::FieldConfig field = cfg.field_config();
  const tss::Hamiltonian H = tss::hamiltonian_from_field(field);
  const auto [eps_plus, eps_minus] = basis_eps<double>();

  AlgebraicSpinord psi0 = eps_plus;
  bool starts_plus = true;
  if (cfg.theta0) {
    psi0 = tss::tilted_state(*cfg.theta0);
    starts_plus = *cfg.theta0 == 0.0;
  } else if (cfg.initial) {
    psi0 = *cfg.initial;
    starts_plus = psi0 == eps_plus;
  }
  if (!psi0.is_normalized()) throw UsageError("initial state must be normalized");

  const bool has_field = field.field_magnitude() > 0.0;
  if (cfg.check_rabi) {
    if (!has_field) throw UsageError("--check-rabi needs a nonzero field");
    if (!starts_plus) throw UsageError("--check-rabi needs the initial state eps+ (theta0 = 0)");
  }

  std::vector<std::string> names = {"t", "p_plus", "p_minus", "s1", "s2", "s3", "u1", "u2", "u3"};
  if (cfg.check) names.insert(names.end(), {"dev_p", "dev_s", "dev_u"});
  if (cfg.check_rabi) names.insert(names.end(), {"rabi", "dev_rabi"});
  Table table(names);

  const auto S = tss::spin_vectors(field.hbar);
  const Multivectord e3 = Multivectord::blade(Blade::kE3);
  const StateVector2d psi0_column = oracle::spinor_rep(psi0);
  const ComplexMatrix2d Hmat = matrix_of(H);
  const StateVector2d up(1.0, 0.0);
  const StateVector2d down(0.0, 1.0);

  double worst = 0.0;
  for (double t : cfg.grid.points()) {
    const Rotord U = tss::evolution_rotor(H, t, field.hbar);
    const AlgebraicSpinord psi = tss::evolve(psi0, U);
    const double p_plus = tss::probability(eps_plus, psi);
    const double p_minus = tss::probability(eps_minus, psi);
    const tss::Vector3 s(tss::expectation(S[0], psi), tss::expectation(S[1], psi),
                         tss::expectation(S[2], psi));
    const tss::Vector3 u = sandwich(U, e3).vector_part();
    std::vector<double> row = {t, p_plus, p_minus, s.x(), s.y(), s.z(), u.x(), u.y(), u.z()};

    if (cfg.check) {
      const StateVector2d psi_m = oracle::evolve_matrix(psi0_column, Hmat, t, field.hbar);
      const double dev_p = std::max(std::abs(p_plus - oracle::probability_matrix(up, psi_m)),
                                    std::abs(p_minus - oracle::probability_matrix(down, psi_m)));
      double dev_s = 0.0;
      for (int i = 0; i < 3; ++i) {
        const ComplexMatrix2d Si = (0.5 * field.hbar) * oracle::pauli<double>(i + 1);
        dev_s = std::max(dev_s, std::abs(s[i] - oracle::expectation_matrix(Si, psi_m)));
      }
      const double dev_u = has_field ? (u - tss::u_vector_closed_form(field, t)).cwiseAbs().maxCoeff() : 0.0;
      row.insert(row.end(), {dev_p, dev_s, dev_u});
      worst = std::max({worst, dev_p, dev_s, dev_u});
    }
    if (cfg.check_rabi) {
      const double rabi = tss::rabi_probability(field, t);
      const double dev = std::abs(rabi - p_minus);
      row.insert(row.end(), {rabi, dev});
      worst = std::max(worst, dev);
    }
    table.add_row(row);
  }
  table.write(out, cfg.format);
  return worst <= cfg.tol ? kExitOk : kExitTolerance;
}

int cmd_conformance(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  if (cfg.count < 1) throw UsageError("--count must be at least 1");
  const auto results = conformance::run_all(cfg.seed, cfg.count);
  bool all = true;
  if (cfg.format == OutputFormat::kCsv) out << "suite,status,worst_residual,tolerance\n";
  json j = json::array();
  for (const auto& r : results) {
    all = all && r.passed();
    if (cfg.format == OutputFormat::kCsv) {
      out << r.name << ',' << (r.passed() ? "pass" : "FAIL") << ',' << format_double(r.worst_residual) << ','
          << io::format_shortest(r.tolerance) << '\n';
    } else {
      j.push_back({{"suite", r.name},
                   {"passed", r.passed()},
                   {"worst_residual", r.worst_residual},
                   {"tolerance", r.tolerance}});
    }
  }
  if (cfg.format == OutputFormat::kJson) out << j.dump(2) << '\n';
  return all ? kExitOk : kExitTolerance;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-state quantum systems in the geometric algebra of 3D space"};
  app.require_subcommand(1);
  // --h is the Hamiltonian flag, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  struct Flags {
    std::string h, B, format, config, init;
    double q = 1.0, m = 1.0, hbar = 1.0, theta0 = 0.0, t_start = 0.0, t_end = 0.0, tol = 0.0;
    int steps = 0, count = 0;
    std::uint64_t seed = 0;
    bool check = false, check_rabi = false;
  } flags;
  std::map<std::string, CLI::Option*> opts;

  auto add_common = [&](CLI::App* sub) {
    opts["config"] = sub->add_option("--config", flags.config, "JSON configuration file");
    opts["format"] = sub->add_option("--format", flags.format, "csv or json");
    opts["tol"] = sub->add_option("--tol", flags.tol, "numerical tolerance for exit code 2");
  };

  CLI::App* diag = app.add_subcommand("diag", "Diagonalize a Hamiltonian h0 + h1 e1 + h2 e2 + h3 e3");
  CLI::App* evolve = app.add_subcommand("evolve", "Emit a spin trajectory in a static field");
  CLI::App* conf = app.add_subcommand("conformance", "Run randomized invariant suites");

  add_common(diag);
  std::map<std::string, CLI::Option*> diag_opts = opts;
  diag_opts["h"] = diag->add_option("--h", flags.h, "h0,h1,h2,h3");

  opts.clear();
  add_common(evolve);
  std::map<std::string, CLI::Option*> evolve_opts = opts;
  evolve_opts["B"] = evolve->add_option("--B", flags.B, "b1,b2,b3");
  evolve_opts["q"] = evolve->add_option("--q", flags.q, "charge");
  evolve_opts["m"] = evolve->add_option("--m", flags.m, "mass");
  evolve_opts["hbar"] = evolve->add_option("--hbar", flags.hbar, "reduced Planck constant");
  evolve_opts["theta0"] = evolve->add_option("--theta0", flags.theta0, "initial tilt of the spin from e3");
  evolve_opts["init"] = evolve->add_option("--init", flags.init, "initial state: plus or minus");
  evolve_opts["t_start"] = evolve->add_option("--t-start", flags.t_start, "first time point");
  evolve_opts["t_end"] = evolve->add_option("--t-end", flags.t_end, "last time point");
  evolve_opts["steps"] = evolve->add_option("--steps", flags.steps, "number of time points");
  evolve_opts["check"] = evolve->add_flag("--check", flags.check, "append matrix-oracle deviations");
  evolve_opts["check_rabi"] = evolve->add_flag("--check-rabi", flags.check_rabi, "append Rabi closed form");

  opts.clear();
  add_common(conf);
  std::map<std::string, CLI::Option*> conf_opts = opts;
  conf_opts["seed"] = conf->add_option("--seed", flags.seed, "PRNG seed");
  conf_opts["count"] = conf->add_option("--count", flags.count, "samples per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const std::map<std::string, CLI::Option*>& given =
        diag->parsed() ? diag_opts : (evolve->parsed() ? evolve_opts : conf_opts);
    auto set = [&](const char* key) {
      auto it = given.find(key);
      return it != given.end() && it->second->count() > 0;
    };

    RunConfig cfg;
    if (set("config")) {
      std::ifstream in(flags.config);
      if (!in) throw UsageError("cannot open config file '" + flags.config + "'");
      json j;
      try {
        j = json::parse(in);
      } catch (const json::parse_error& e) {
        throw UsageError(std::string("config: ") + e.what());
      }
      apply_json(j, cfg);
    }
    if (set("format")) cfg.format = parse_format(flags.format);
    if (set("tol")) cfg.tol = flags.tol;
    if (set("h")) {
      const auto h = parse_list(flags.h, 4, "--h");
      cfg.hamiltonian = tss::Hamiltonian(h[0], h[1], h[2], h[3]);
    }
    if (set("B")) {
      const auto b = parse_list(flags.B, 3, "--B");
      cfg.field = tss::Vector3(b[0], b[1], b[2]);
    }
    if (set("q")) cfg.q = flags.q;
    if (set("m")) cfg.m = flags.m;
    if (set("hbar")) cfg.hbar = flags.hbar;
    if (set("init")) {
      cfg.initial = parse_initial(json(flags.init));
      cfg.theta0.reset();
    }
    if (set("theta0")) cfg.theta0 = flags.theta0;
    if (set("t_start")) cfg.grid.t_start = flags.t_start;
    if (set("t_end")) cfg.grid.t_end = flags.t_end;
    if (set("steps")) cfg.grid.steps = flags.steps;
    if (set("check")) cfg.check = flags.check;
    if (set("check_rabi")) cfg.check_rabi = flags.check_rabi;
    if (set("seed")) cfg.seed = flags.seed;
    if (set("count")) cfg.count = flags.count;
    if (!(cfg.tol >= 0.0)) throw UsageError("--tol must be non-negative");

    if (conf->parsed()) return cmd_conformance(cfg, out, err);
    cfg.validate();
    if (diag->parsed()) return cmd_diag(cfg, out, err);
    return cmd_evolve(cfg, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace g3::cli
