#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <clocale>

#include "g3tss/io.hpp"
#include "test_support.hpp"

using namespace g3;
using g3::testing::Random;
using nlohmann::json;

TEST_CASE("number formatting") {
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(io::format_double(1.0) == "1");
  CHECK(io::format_double(-2.5) == "-2.5");
  CHECK(io::format_double(std::sqrt(2.0)) == "1.4142135623730951");
  CHECK(io::format_shortest(0.1) == "0.1");
  CHECK(io::format_shortest(1e-300) == "1e-300");

  Random rng(61);
  for (int k = 0; k < 1000; ++k) {
    const double v = rng.uniform(-1e3, 1e3);
    CHECK(std::stod(io::format_double(v)) == v);
    CHECK(std::stod(io::format_shortest(v)) == v);
  }
}

TEST_CASE("formatting ignores the C locale") {
  const char* previous = std::setlocale(LC_NUMERIC, nullptr);
  const std::string saved = previous ? previous : "C";
  if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) {
    CHECK(io::format_double(0.5) == "0.5");
    std::setlocale(LC_NUMERIC, saved.c_str());
  }
  CHECK(io::format_double(0.5) == "0.5");
}

TEST_CASE("text rendering") {
  CHECK(io::to_text(Multivectord::zero()) == "0");
  CHECK(io::to_text(Multivectord::scalar(2.0)) == "2");
  CHECK(io::to_text(Multivectord::blade(Blade::kE31, -0.5)) == "-0.5 e31");
  CHECK(io::to_text(Multivectord::pseudoscalar()) == "1 e123");

  Multivectord::Coeffs c = Multivectord::Coeffs::Zero();
  c[0] = 1.5;
  c[1] = -2.0;
  c[6] = 0.25;
  CHECK(io::to_text(Multivectord(c)) == "1.5 - 2 e1 + 0.25 e12");

  c = Multivectord::Coeffs::Zero();
  c[2] = 1.0;
  c[3] = 1.0;
  c[4] = 1.0;
  c[5] = 1.0;
  CHECK(io::to_text(Multivectord(c)) == "1 e2 + 1 e3 + 1 e23 + 1 e31");
}

TEST_CASE("multivector JSON round trip") {
  Random rng(62);
  for (int k = 0; k < 200; ++k) {
    const Multivectord m = rng.multivector();
    const json j = io::to_json(m);
    CHECK(j.size() == 8);
    CHECK(io::multivector_from_json(json::parse(j.dump())) == m);
  }
  CHECK(io::to_json(Multivectord::blade(Blade::kE2)) == json::parse("[0,0,1,0,0,0,0,0]"));
}

TEST_CASE("multivector JSON validation") {
  CHECK_THROWS_AS(io::multivector_from_json(json::parse("[1,2,3]")), std::invalid_argument);
  CHECK_THROWS_AS(io::multivector_from_json(json::parse("{\"a\":1}")), std::invalid_argument);
  CHECK_THROWS_AS(io::multivector_from_json(json::parse("[1,2,3,4,5,6,7,\"x\"]")), std::invalid_argument);
  CHECK_THROWS_AS(io::multivector_from_json(json::parse("[1,2,3,4,5,6,7,8,9]")), std::invalid_argument);
}

TEST_CASE("spinor JSON") {
  const auto [plus, minus] = basis_eps<double>();
  CHECK(io::to_json(plus) == json::parse(R"({"c_plus":[1.0,0.0],"c_minus":[0.0,0.0]})"));
  CHECK(io::spinor_from_json(json::parse(R"({"c_plus":[0,0],"c_minus":[1,0]})")) == minus);

  Random rng(63);
  for (int k = 0; k < 200; ++k) {
    const AlgebraicSpinord psi = rng.state();
    CHECK(io::spinor_from_json(json::parse(io::to_json(psi).dump())) == psi);
  }

  CHECK_THROWS_AS(io::spinor_from_json(json::parse(R"({"c_plus":[1,0]})")), std::invalid_argument);
  CHECK_THROWS_AS(io::spinor_from_json(json::parse(R"({"c_plus":[1],"c_minus":[0,0]})")), std::invalid_argument);
  CHECK_THROWS_AS(io::spinor_from_json(json::parse("[1,0,0,0]")), std::invalid_argument);
}
