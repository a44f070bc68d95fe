#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "g3tss/cli.hpp"

using namespace g3;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "g3tss");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<double> fields(const std::string& line) {
  std::vector<double> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(std::stod(cell));
  return out;
}

std::string value_of(const std::string& csv, const std::string& key) {
  for (const auto& line : lines(csv)) {
    if (line.rfind(key + ",", 0) == 0) return line.substr(key.size() + 1);
  }
  return {};
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"nonsense"}).code == cli::kExitUsage);
  CHECK(run({"diag"}).code == cli::kExitUsage);
  CHECK(run({"diag", "--h", "1,2,3"}).code == cli::kExitUsage);
  CHECK(run({"diag", "--h", "1,2,x,4"}).code == cli::kExitUsage);
  CHECK(run({"diag", "--h", "0,0,0,1", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(run({"evolve"}).code == cli::kExitUsage);
  CHECK(run({"evolve", "--B", "0,0,1", "--steps", "0"}).code == cli::kExitUsage);
  CHECK(run({"evolve", "--B", "0,0,1", "--t-start", "2", "--t-end", "1"}).code == cli::kExitUsage);
  CHECK(run({"evolve", "--B", "0,0,1", "--m", "0"}).code == cli::kExitUsage);
  CHECK(run({"evolve", "--B", "0,0,1", "--hbar", "-1"}).code == cli::kExitUsage);
  CHECK(run({"evolve", "--B", "0,0,1", "--init", "sideways"}).code == cli::kExitUsage);
  CHECK(run({"conformance", "--count", "0"}).code == cli::kExitUsage);
  CHECK(run({"conformance", "--config", "/nonexistent/g3tss.json"}).code == cli::kExitUsage);

  const Result help = run({"--help"});
  CHECK(help.code == cli::kExitOk);
  CHECK(help.out.find("evolve") != std::string::npos);
}

TEST_CASE("diag on sigma1 + sigma3") {
  const Result r = run({"diag", "--h", "0,1,0,1"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(lines(r.out).front() == "quantity,value");
  CHECK(value_of(r.out, "e_plus") == "1.4142135623730951");
  CHECK(value_of(r.out, "e_minus") == "-1.4142135623730951");
  CHECK(value_of(r.out, "degenerate") == "false");
  CHECK(std::abs(std::stod(value_of(r.out, "diagonal_h3")) - std::sqrt(2.0)) <= 1e-15);
  CHECK(std::stod(value_of(r.out, "residual_eigen")) <= 1e-12);

  const std::string psi = value_of(r.out, "psi_plus");
  std::istringstream in(psi.substr(1, psi.size() - 2));
  double a = 0, b = 0, c = 0, d = 0;
  in >> a >> b >> c >> d;
  CHECK(std::abs(a - 0.92387953251128674) <= 1e-12);
  CHECK(std::abs(c - 0.38268343236508978) <= 1e-12);
}

TEST_CASE("diag edge cases and JSON") {
  const Result degenerate = run({"diag", "--h", "5,0,0,0"});
  CHECK(degenerate.code == cli::kExitOk);
  CHECK(value_of(degenerate.out, "degenerate") == "true");
  CHECK(value_of(degenerate.out, "rotor_text") == "\"1\"");

  const Result j = run({"diag", "--h", "0,1,0,1", "--format", "json"});
  REQUIRE(j.code == cli::kExitOk);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("e_plus").get<double>() == std::sqrt(2.0));
  CHECK(doc.at("rotor").size() == 8);
  CHECK(doc.at("psi_minus").contains("c_minus"));
}

TEST_CASE("evolve CSV") {
  const Result r = run({"evolve", "--B", "0,0,1", "--theta0", "1.5707963267948966", "--t-end", "6", "--steps", "7"});
  REQUIRE(r.code == cli::kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == "t,p_plus,p_minus,s1,s2,s3,u1,u2,u3");
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto v = fields(rows[k]);
    REQUIRE(v.size() == 9);
    CHECK(v[0] == static_cast<double>(k - 1));
    CHECK(std::abs(v[3] - 0.5 * std::cos(v[0])) <= 1e-12);
    CHECK(std::abs(v[4] + 0.5 * std::sin(v[0])) <= 1e-12);
    CHECK(std::abs(v[5]) <= 1e-12);
    CHECK(std::abs(v[1] - 0.5) <= 1e-12);
  }
}

TEST_CASE("evolve single point and checks") {
  const Result one = run({"evolve", "--B", "1,1,1", "--t-start", "3", "--steps", "1"});
  REQUIRE(one.code == cli::kExitOk);
  REQUIRE(lines(one.out).size() == 2);
  CHECK(fields(lines(one.out)[1])[0] == 3.0);

  const Result zero = run({"evolve", "--B", "1,1,1", "--t-end", "0", "--steps", "1"});
  CHECK(fields(lines(zero.out)[1])[1] == 1.0);

  const Result checked = run({"evolve", "--B", "1,1,1", "--check", "--check-rabi", "--steps", "201"});
  REQUIRE(checked.code == cli::kExitOk);
  const auto rows = lines(checked.out);
  CHECK(rows[0] == "t,p_plus,p_minus,s1,s2,s3,u1,u2,u3,dev_p,dev_s,dev_u,rabi,dev_rabi");
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto v = fields(rows[k]);
    for (std::size_t i = 9; i < 12; ++i) CHECK(v[i] <= 1e-10);
    CHECK(v[13] <= 1e-10);
  }

  CHECK(run({"evolve", "--B", "0,0,0", "--check-rabi"}).code == cli::kExitUsage);
  CHECK(run({"evolve", "--B", "1,0,0", "--theta0", "0.5", "--check-rabi"}).code == cli::kExitUsage);
  CHECK(run({"evolve", "--B", "1,0,0", "--init", "minus", "--check-rabi"}).code == cli::kExitUsage);

  const Result minus = run({"evolve", "--B", "0,0,0", "--init", "minus", "--steps", "2", "--check"});
  REQUIRE(minus.code == cli::kExitOk);
  CHECK(fields(lines(minus.out)[2])[2] == 1.0);
}

TEST_CASE("an unreachable tolerance gives exit code 2") {
  CHECK(run({"evolve", "--B", "1,2,3", "--check", "--tol", "0", "--t-end", "50"}).code == cli::kExitTolerance);
  CHECK(run({"evolve", "--B", "1,2,3", "--check", "--tol", "-1"}).code == cli::kExitUsage);
}

TEST_CASE("evolve JSON") {
  const Result r = run({"evolve", "--B", "0,1,0", "--steps", "5", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("t").size() == 5);
  CHECK(doc.at("u3").size() == 5);
  CHECK(doc.at("p_plus")[0].get<double>() == 1.0);
}

TEST_CASE("config files with flag overrides") {
  const auto path = write_temp("g3tss_test_cli_config.json",
                               R"({"B": [0, 0, 2], "theta0": 0.5, "t_end": 1, "steps": 3, "q": 1.5})");
  const Result base = run({"evolve", "--config", path.string()});
  REQUIRE(base.code == cli::kExitOk);
  CHECK(lines(base.out).size() == 4);

  const Result overridden = run({"evolve", "--config", path.string(), "--steps", "5"});
  REQUIRE(overridden.code == cli::kExitOk);
  CHECK(lines(overridden.out).size() == 6);
  CHECK(lines(overridden.out)[1] == lines(base.out)[1]);

  const auto bad = write_temp("g3tss_test_cli_bad.json", R"({"B": [0, 0, 2], "colour": "red"})");
  CHECK(run({"evolve", "--config", bad.string()}).code == cli::kExitUsage);
  const auto broken = write_temp("g3tss_test_cli_broken.json", "{\"B\": [0, 0");
  CHECK(run({"evolve", "--config", broken.string()}).code == cli::kExitUsage);
  const auto initial = write_temp("g3tss_test_cli_initial.json",
                                  R"({"B": [0, 0, 1], "initial": {"c_plus": [0, 0], "c_minus": [0, 1]}, "steps": 2})");
  const Result from_initial = run({"evolve", "--config", initial.string()});
  REQUIRE(from_initial.code == cli::kExitOk);
  CHECK(fields(lines(from_initial.out)[1])[2] == 1.0);

  std::filesystem::remove(path);
  std::filesystem::remove(bad);
  std::filesystem::remove(broken);
  std::filesystem::remove(initial);
}

TEST_CASE("conformance") {
  const Result r = run({"conformance", "--seed", "7", "--count", "50"});
  REQUIRE(r.code == cli::kExitOk);
  const auto rows = lines(r.out);
  CHECK(rows[0] == "suite,status,worst_residual,tolerance");
  CHECK(rows.size() == 7);
  for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k].find(",pass,") != std::string::npos);

  const Result j = run({"conformance", "--count", "10", "--format", "json"});
  REQUIRE(j.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(j.out).size() == 6);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"evolve", "--B", "0.3,-1.1,0.7", "--q", "2", "--check", "--steps", "301"};
  CHECK(run(args).out == run(args).out);
  CHECK(run({"conformance", "--count", "100"}).out == run({"conformance", "--count", "100"}).out);
}
